#pragma once

// Reduced rational functions in (p, xi, z); the denominator's grlex-leading
// coefficient is 1, so equal values have equal representations.

#include "twistkit/coeff/poly.hpp"
#include "twistkit/coeff/series.hpp"

#include <array>
#include <climits>
#include <stdexcept>
#include <string>

namespace twistkit {

class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RatFun(int c) : RatFun(Rational(c)) {}            // NOLINT
    RatFun(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun var(int v) { return RatFun(Poly::var(v)); }
    static RatFun p() { return var(VarP); }
    static RatFun xi() { return var(VarXi); }
    static RatFun z() { return var(VarZ); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFun is not constant");
        return num_.constant_value() / den_.constant_value();
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        if (a.den_.is_constant() && b.den_.is_constant() && (a.num_.is_constant() || b.num_.is_constant()))
            return RatFun(a.num_ * b.num_, a.den_ * b.den_);
        // cross-cancel first to keep intermediate sizes small
        Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        RatFun r;
        r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        r.fix_sign();
        return r;
    }
    RatFun inv() const {
        if (is_zero()) throw std::domain_error("RatFun: inversion of zero");
        return RatFun(den_, num_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun pow(int e) const {
        if (e < 0) return inv().pow(-e);
        RatFun r;
        r.num_ = num_.pow(e);
        r.den_ = den_.pow(e);
        return r;
    }

    // Order of vanishing in v (negative for a pole); INT_MAX for zero.
    int valuation(int v) const {
        if (is_zero()) return INT_MAX;
        return num_.valuation(v) - den_.valuation(v);
    }

    RatFun substitute(int v, const Rational& x) const {
        Poly d = den_.substitute(v, x);
        if (d.is_zero()) throw std::domain_error("RatFun::substitute: denominator vanishes");
        return RatFun(num_.substitute(v, x), d);
    }
    RatFun substitute(int v, const RatFun& x) const {
        RatFun n = compose(num_, v, x), d = compose(den_, v, x);
        if (d.is_zero()) throw std::domain_error("RatFun::substitute: denominator vanishes");
        return n / d;
    }
    Rational evaluate(const Rational& p, const Rational& xi, const Rational& z) const {
        std::array<Rational, kNumVars> x{p, xi, z};
        Rational d = den_.evaluate(x);
        if (d == 0) throw std::domain_error("RatFun::evaluate: denominator vanishes");
        return num_.evaluate(x) / d;
    }

    // Expansion with p = e^{h/4} (so q = e^{h/2}) in the (h, xi) grading; z must be absent.
    TruncSeries to_series(int order) const {
        if (num_.has_var(VarZ) || den_.has_var(VarZ))
            throw std::domain_error("RatFun::to_series: z present");
        const int extra = 2 * (std::max(num_.degree(VarXi), 0) + std::max(den_.degree(VarXi), 0)) + 2;
        const int work = order + extra;
        TruncSeries n = poly_series(num_, work), d = poly_series(den_, work);
        TruncSeries q = series_div_val(n, d);
        if (q.order() < order) throw std::domain_error("RatFun::to_series: insufficient precision");
        return q.with_order(order);
    }

    std::string to_string() const {
        if (den_ == Poly(1)) return num_.to_string();
        auto wrap = [](const Poly& x) {
            std::string s = x.to_string();
            return x.terms().size() > 1 ? "(" + s + ")" : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    static RatFun compose(const Poly& poly, int v, const RatFun& x) {
        auto cs = poly.coeffs_in(v);
        RatFun acc;
        for (size_t k = cs.size(); k-- > 0;) acc = acc * x + RatFun(cs[k]);
        return acc;
    }
    static TruncSeries poly_series(const Poly& poly, int order) {
        TruncSeries p_ser = series_exp(TruncSeries::h(order) * Rational(1, 4));
        TruncSeries out(order);
        for (const auto& [e, c] : poly.terms()) {
            TruncSeries t = TruncSeries::monomial(0, e[VarXi], c, order);
            for (int k = 0; k < e[VarP]; ++k) t = t * p_ser;
            out += t;
        }
        return out;
    }
    void fix_sign() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Rational c = den_.leading_coeff();
        if (c != 1) {
            num_ *= 1 / c;
            den_ *= 1 / c;
        }
    }
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (!den_.is_constant() && !num_.is_zero()) {
            Poly g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        fix_sign();
    }

    Poly num_;
    Poly den_;
};

}  // namespace twistkit
