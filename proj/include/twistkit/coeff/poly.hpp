#pragma once

// Sparse multivariate polynomials over Q in the three parameters p, xi, z.

#include "twistkit/rational.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistkit {

enum Var : int { VarP = 0, VarXi = 1, VarZ = 2 };
inline constexpr int kNumVars = 3;
inline const char* var_name(int v) { return v == VarP ? "p" : v == VarXi ? "xi" : "z"; }

using Exps = std::array<int, kNumVars>;

// Graded lex, z > xi > p.  Maps ordered with this put the leading term first.
struct GrlexGreater {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        for (int v = kNumVars - 1; v >= 0; --v)
            if (a[v] != b[v]) return a[v] > b[v];
        return false;
    }
};

class Poly {
public:
    using Terms = std::map<Exps, Rational, GrlexGreater>;

    Poly() = default;
    Poly(const Rational& c) {  // NOLINT: implicit constant embedding is convenient
        if (c != 0) t_[Exps{0, 0, 0}] = c;
    }
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT

    static Poly var(int v, int power = 1) {
        Poly p;
        Exps e{0, 0, 0};
        e[v] = power;
        p.t_[e] = 1;
        return p;
    }
    static Poly monomial(const Exps& e, const Rational& c) {
        Poly p;
        if (c != 0) p.t_[e] = c;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exps{0, 0, 0}); }
    Rational constant_value() const {
        auto it = t_.find(Exps{0, 0, 0});
        return it == t_.end() ? Rational(0) : it->second;
    }
    const Rational& leading_coeff() const { return t_.begin()->second; }
    const Exps& leading_exps() const { return t_.begin()->first; }

    int degree(int v) const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e[v]);
        return d;
    }
    int valuation(int v) const {
        if (t_.empty()) return INT_MAX;
        int d = INT_MAX;
        for (const auto& [e, c] : t_) d = std::min(d, e[v]);
        return d;
    }
    bool has_var(int v) const { return degree(v) > 0; }
    int main_var() const {
        for (int v = kNumVars - 1; v >= 0; --v)
            if (has_var(v)) return v;
        return -1;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.t_) {
            auto [it, fresh] = t_.emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) t_.erase(it);
            }
        }
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.t_) {
            auto [it, fresh] = t_.emplace(e, -c);
            if (!fresh) {
                it->second -= c;
                if (it->second == 0) t_.erase(it);
            }
        }
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        if (c == 0) {
            t_.clear();
        } else {
            for (auto& [e, x] : t_) x *= c;
        }
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_constant()) return b * a.constant_value();
        if (b.is_constant()) return a * b.constant_value();
        Poly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                auto [it, fresh] = r.t_.emplace(e, ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second == 0) r.t_.erase(it);
                }
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const {
        Poly r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // Coefficients in variable v (index = power of v); entries are free of v.
    std::vector<Poly> coeffs_in(int v) const {
        std::vector<Poly> out(std::max(degree(v), 0) + 1);
        for (const auto& [e, c] : t_) {
            Exps f = e;
            f[v] = 0;
            out[e[v]].t_.emplace(f, c);
        }
        return out;
    }
    static Poly from_coeffs(int v, const std::vector<Poly>& cs) {
        Poly r;
        for (size_t k = 0; k < cs.size(); ++k)
            for (const auto& [e, c] : cs[k].t_) {
                Exps f = e;
                f[v] += static_cast<int>(k);
                r.t_.emplace(f, c);
            }
        return r;
    }

    Poly substitute(int v, const Rational& x) const {
        Poly r;
        for (const auto& [e, c] : t_) {
            Exps f = e;
            f[v] = 0;
            r += monomial(f, c * rpow(x, e[v]));
        }
        return r;
    }
    Rational evaluate(const std::array<Rational, kNumVars>& x) const {
        Rational s = 0;
        for (const auto& [e, c] : t_) s += c * rpow(x[0], e[0]) * rpow(x[1], e[1]) * rpow(x[2], e[2]);
        return s;
    }

    // Divides out z^k (or any variable power); caller guarantees divisibility.
    Poly shift_down(int v, int k) const {
        Poly r;
        for (const auto& [e, c] : t_) {
            Exps f = e;
            f[v] -= k;
            if (f[v] < 0) throw std::domain_error("shift_down: not divisible");
            r.t_.emplace(f, c);
        }
        return r;
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : t_) {
            std::string mono;
            for (int v = 0; v < kNumVars; ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(v);
                if (e[v] > 1) mono += "^" + std::to_string(e[v]);
            }
            Rational a = abs(c);
            std::string body;
            if (mono.empty()) {
                body = twistkit::to_string(a);
            } else if (a == 1) {
                body = mono;
            } else {
                body = twistkit::to_string(a) + "*" + mono;
            }
            if (first) {
                out = (c < 0 ? "-" : "") + body;
            } else {
                out += (c < 0 ? " - " : " + ") + body;
            }
            first = false;
        }
        return out;
    }

private:
    Terms t_;
};

// Exact division; throws if b does not divide a.
inline Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (b.is_constant()) return a * (1 / b.constant_value());
    Poly q, r = a;
    const Exps& lb = b.leading_exps();
    const Rational& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Exps& lr = r.leading_exps();
        Exps m;
        for (int v = 0; v < kNumVars; ++v) {
            m[v] = lr[v] - lb[v];
            if (m[v] < 0) throw std::domain_error("exact_div: not divisible");
        }
        Poly t = Poly::monomial(m, r.leading_coeff() / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

inline Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return a * (1 / a.leading_coeff());
}

inline Poly content_in(const Poly& a, int v) {
    Poly g;
    for (const auto& c : a.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : poly_gcd(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

inline std::vector<Poly> trim(std::vector<Poly> p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

// Pseudo-remainder of a by b as polynomials in v.
inline Poly prem_in(const Poly& a, const Poly& b, int v) {
    auto A = trim(a.coeffs_in(v));
    auto B = trim(b.coeffs_in(v));
    const size_t db = B.size() - 1;
    const Poly& lb = B.back();
    while (A.size() > db && !A.empty()) {
        Poly la = A.back();
        size_t shift = A.size() - 1 - db;
        for (auto& c : A) c = c * lb;
        for (size_t k = 0; k <= db; ++k) A[k + shift] -= la * B[k];
        A = trim(std::move(A));
    }
    return Poly::from_coeffs(v, A);
}

}  // namespace detail

// Greatest common divisor, normalised to leading coefficient 1.  Recursive
// primitive PRS on the highest variable present.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    using detail::monic;
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    const int v = std::max(a.main_var(), b.main_var());
    if (!a.has_var(v)) return poly_gcd(a, detail::content_in(b, v));
    if (!b.has_var(v)) return poly_gcd(detail::content_in(a, v), b);
    Poly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
    Poly gc = poly_gcd(ca, cb);
    Poly f = exact_div(a, ca), g = exact_div(b, cb);
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    while (!g.is_zero() && g.degree(v) > 0) {
        Poly r = detail::prem_in(f, g, v);
        f = std::move(g);
        if (r.is_zero()) {
            g = Poly();
        } else {
            g = monic(exact_div(r, detail::content_in(r, v)));
        }
    }
    if (!g.is_zero()) return monic(gc);  // remainder chain hit a v-free term: coprime in v
    Poly pf = exact_div(f, detail::content_in(f, v));
    return monic(gc * pf);
}

}  // namespace twistkit
