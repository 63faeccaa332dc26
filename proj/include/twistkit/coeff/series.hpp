#pragma once

// Truncated power series in (h, xi) with rational coefficients.
// Both variables have degree 1; everything above total degree `order` is dropped.

#include "twistkit/rational.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistkit {

struct SeriesTerm {
    int dh = 0;
    int dx = 0;
    Rational c;
};

class TruncSeries {
public:
    explicit TruncSeries(int order = 4) : order_(order) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }

    static TruncSeries constant(const Rational& c, int order) {
        return monomial(0, 0, c, order);
    }
    static TruncSeries monomial(int dh, int dx, const Rational& c, int order) {
        TruncSeries s(order);
        if (c != 0 && dh + dx <= order) s.terms_.push_back({dh, dx, c});
        return s;
    }
    static TruncSeries h(int order) { return monomial(1, 0, 1, order); }
    static TruncSeries xi(int order) { return monomial(0, 1, 1, order); }

    int order() const { return order_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Lowest total degree present; order()+1 for the zero series.
    int valuation() const {
        int v = order_ + 1;
        for (const auto& t : terms_) v = std::min(v, t.dh + t.dx);
        return v;
    }

    Rational coeff(int dh, int dx) const {
        for (const auto& t : terms_)
            if (t.dh == dh && t.dx == dx) return t.c;
        return 0;
    }
    Rational constant_term() const { return coeff(0, 0); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].dh == 0 && terms_[0].dx == 0);
    }

    // Drops terms above n and retags.  Raising the order is only exact for
    // series that are known polynomials, so callers decide.
    TruncSeries with_order(int n) const {
        TruncSeries s(n);
        for (const auto& t : terms_)
            if (t.dh + t.dx <= n) s.terms_.push_back(t);
        return s;
    }

    TruncSeries set_xi_zero() const {
        TruncSeries s(order_);
        for (const auto& t : terms_)
            if (t.dx == 0) s.terms_.push_back(t);
        return s;
    }
    TruncSeries set_h_zero() const {
        TruncSeries s(order_);
        for (const auto& t : terms_)
            if (t.dh == 0) s.terms_.push_back(t);
        return s;
    }

    TruncSeries operator-() const {
        TruncSeries s = *this;
        for (auto& t : s.terms_) t.c = -t.c;
        return s;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check(o);
        if (o.terms_.empty()) return *this;
        std::vector<SeriesTerm> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && less(*a, *b))) {
                out.push_back(std::move(*a++));
            } else if (a == terms_.end() || less(*b, *a)) {
                out.push_back(*b++);
            } else {
                Rational c = a->c + b->c;
                if (c != 0) out.push_back({a->dh, a->dx, std::move(c)});
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) { return *this += -o; }
    TruncSeries& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.c *= c;
        }
        return *this;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.order_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        if (b.is_constant()) return a * b.terms_[0].c;
        if (a.is_constant()) return b * a.terms_[0].c;
        std::vector<SeriesTerm> raw;
        raw.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_)
                if (x.dh + x.dx + y.dh + y.dx <= a.order_)
                    raw.push_back({x.dh + y.dh, x.dx + y.dx, x.c * y.c});
        r.terms_ = merge_sorted(std::move(raw));
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.order_ != b.order_ || a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& x = a.terms_[i];
            const auto& y = b.terms_[i];
            if (x.dh != y.dh || x.dx != y.dx || x.c != y.c) return false;
        }
        return true;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // Canonical text: ascending total degree, then descending h-degree.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const SeriesTerm*> v;
        for (const auto& t : terms_) v.push_back(&t);
        std::sort(v.begin(), v.end(), [](const SeriesTerm* x, const SeriesTerm* y) {
            int dx = x->dh + x->dx, dy = y->dh + y->dx;
            if (dx != dy) return dx < dy;
            return x->dh > y->dh;
        });
        std::string out;
        for (const auto* t : v) {
            std::string mono;
            if (t->dh > 0) mono += t->dh == 1 ? "h" : "h^" + std::to_string(t->dh);
            if (t->dx > 0) {
                if (!mono.empty()) mono += "*";
                mono += t->dx == 1 ? "xi" : "xi^" + std::to_string(t->dx);
            }
            Rational a = abs(t->c);
            std::string body = mono.empty() ? twistkit::to_string(a)
                               : a == 1     ? mono
                                            : twistkit::to_string(a) + "*" + mono;
            if (out.empty()) {
                out = (t->c < 0 ? "-" : "") + body;
            } else {
                out += (t->c < 0 ? " - " : " + ") + body;
            }
        }
        return out;
    }

private:
    static bool less(const SeriesTerm& a, const SeriesTerm& b) {
        return a.dh != b.dh ? a.dh < b.dh : a.dx < b.dx;
    }
    static std::vector<SeriesTerm> merge_sorted(std::vector<SeriesTerm> raw) {
        std::sort(raw.begin(), raw.end(), less);
        std::vector<SeriesTerm> out;
        for (auto& t : raw) {
            if (!out.empty() && out.back().dh == t.dh && out.back().dx == t.dx) {
                out.back().c += t.c;
            } else {
                if (!out.empty() && out.back().c == 0) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().c == 0) out.pop_back();
        return out;
    }
    void check(const TruncSeries& o) const {
        if (order_ != o.order_) throw std::invalid_argument("mismatched truncation orders");
    }

    int order_;
    std::vector<SeriesTerm> terms_;  // sorted by (dh, dx), no zeros, no degree above order_
};

inline TruncSeries series_exp(const TruncSeries& a) {
    if (a.constant_term() != 0) throw std::domain_error("series_exp: nonzero constant term");
    const int n = a.order();
    TruncSeries sum = TruncSeries::constant(1, n), term = sum;
    for (int k = 1; k <= n; ++k) {
        term = term * a * Rational(1, k);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

inline TruncSeries series_log(const TruncSeries& a) {
    if (a.constant_term() != 1) throw std::domain_error("series_log: constant term must be 1");
    const int n = a.order();
    TruncSeries x = a - TruncSeries::constant(1, n);
    TruncSeries sum(n), pw = TruncSeries::constant(1, n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * x;
        if (pw.is_zero()) break;
        sum += pw * Rational(k % 2 ? 1 : -1, k);
    }
    return sum;
}

// Inverse of a unit (nonzero constant term).
inline TruncSeries series_inverse(const TruncSeries& a) {
    Rational c0 = a.constant_term();
    if (c0 == 0) throw std::domain_error("series_inverse: not a unit");
    const int n = a.order();
    TruncSeries y = a * (1 / c0) - TruncSeries::constant(1, n);
    TruncSeries sum = TruncSeries::constant(1, n), pw = sum;
    for (int k = 1; k <= n; ++k) {
        pw = pw * (-y);
        if (pw.is_zero()) break;
        sum += pw;
    }
    return sum * (1 / c0);
}

// c with b*c = a, valid to order N - valuation(b).  The lowest-degree part of b
// must be one monomial m dividing every term of b; a must be divisible by m.
inline TruncSeries series_div_val(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("mismatched truncation orders");
    if (b.is_zero()) throw std::domain_error("series_div_val: division by zero");
    const int v = b.valuation();
    if (a.valuation() < v) throw std::domain_error("series_div_val: valuation(a) < valuation(b)");
    const SeriesTerm* lead = nullptr;
    for (const auto& t : b.terms())
        if (t.dh + t.dx == v) {
            if (lead) throw std::domain_error("series_div_val: leading part of b is not a monomial");
            lead = &t;
        }
    const int mh = lead->dh, mx = lead->dx;
    const int n = a.order() - v;
    auto shift = [&](const TruncSeries& s, bool strict) {
        TruncSeries out(n);
        for (const auto& t : s.terms()) {
            if (t.dh < mh || t.dx < mx) {
                if (strict || t.dh + t.dx - v <= n)
                    throw std::domain_error("series_div_val: not divisible by leading monomial");
                continue;
            }
            out += TruncSeries::monomial(t.dh - mh, t.dx - mx, t.c, n);
        }
        return out;
    };
    TruncSeries unit = shift(b, true);
    TruncSeries quot = shift(a, false);
    return quot * series_inverse(unit);
}

// h -> zeta*xi with a rational slope; the result lives in xi alone.
inline TruncSeries series_subst(const TruncSeries& a, const Rational& zeta) {
    TruncSeries out(a.order());
    for (const auto& t : a.terms())
        out += TruncSeries::monomial(0, t.dh + t.dx, t.c * rpow(zeta, t.dh), a.order());
    return out;
}

// Polynomial in one symbol zeta with rational coefficients; index = power.
using ZetaPoly = std::vector<Rational>;

inline ZetaPoly zeta_trim(ZetaPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline std::string zeta_to_string(const ZetaPoly& p) {
    std::string out;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += to_string(p[k]);
        } else {
            std::string m = k == 1 ? "zeta" : "zeta^" + std::to_string(k);
            out += p[k] == 1 ? m : to_string(p[k]) + "*" + m;
        }
    }
    return out.empty() ? "0" : out;
}

// h -> zeta*xi with zeta a fresh commuting symbol: xi-degree -> polynomial in zeta.
inline std::map<int, ZetaPoly> series_subst_symbolic(const TruncSeries& a) {
    std::map<int, ZetaPoly> out;
    for (const auto& t : a.terms()) {
        auto& poly = out[t.dh + t.dx];
        if (poly.size() <= static_cast<size_t>(t.dh)) poly.resize(t.dh + 1);
        poly[t.dh] += t.c;
    }
    for (auto it = out.begin(); it != out.end();) {
        it->second = zeta_trim(it->second);
        it = it->second.empty() ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace twistkit
