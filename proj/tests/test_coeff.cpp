#include "twistkit/coeff/ratfun.hpp"

#include <gtest/gtest.h>

using namespace twistkit;

TEST(Rational, ParseCanonicalizes) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rational, SquareRoots) {
    Rational r;
    ASSERT_TRUE(rational_sqrt(Rational(9, 4), r));
    EXPECT_EQ(r, Rational(3, 2));
    EXPECT_FALSE(rational_sqrt(Rational(2), r));
    EXPECT_FALSE(rational_sqrt(Rational(-1), r));
}

TEST(Series, ExpCoefficients) {
    TruncSeries e = series_exp(TruncSeries::h(4));
    Rational f = 1;
    for (int k = 0; k <= 4; ++k) {
        if (k) f *= k;
        EXPECT_EQ(e.coeff(k, 0), 1 / f) << k;
    }
}

TEST(Series, LogInvertsExp) {
    const int N = 5;
    TruncSeries x = TruncSeries::h(N) * Rational(2) + TruncSeries::xi(N) - TruncSeries::monomial(1, 1, 3, N);
    EXPECT_EQ(series_log(series_exp(x)), x);
}

TEST(Series, InverseAndTruncation) {
    const int N = 4;
    TruncSeries a = TruncSeries::constant(1, N) + TruncSeries::h(N) - TruncSeries::xi(N) * Rational(1, 3);
    EXPECT_EQ(a * series_inverse(a), TruncSeries::constant(1, N));
    TruncSeries h = TruncSeries::h(N);
    EXPECT_TRUE((h * h * h * h * h).is_zero());
    EXPECT_FALSE((h * h * h * h).is_zero());
}

TEST(Series, DivisionByValuation) {
    const int N = 4;
    TruncSeries num = TruncSeries::constant(1, N + 1) - series_exp(-TruncSeries::h(N + 1));
    TruncSeries q = series_div_val(num, TruncSeries::h(N + 1));
    EXPECT_EQ(q.constant_term(), 1);
    EXPECT_EQ(q.coeff(1, 0), Rational(-1, 2));
}

TEST(Series, SetVariablesToZero) {
    const int N = 3;
    TruncSeries s = TruncSeries::constant(2, N) + TruncSeries::h(N) + TruncSeries::xi(N) * TruncSeries::h(N);
    EXPECT_EQ(s.set_xi_zero(), TruncSeries::constant(2, N) + TruncSeries::h(N));
    EXPECT_EQ(s.set_h_zero(), TruncSeries::constant(2, N));
}

TEST(Poly, GcdOfSharedFactor) {
    Poly p = Poly::var(VarP), xi = Poly::var(VarXi), z = Poly::var(VarZ);
    Poly one = Poly::monomial({0, 0, 0}, 1);
    Poly g = poly_gcd((p - one) * (p + z), (p - one) * xi);
    EXPECT_EQ(g, p - one);  // gcd is returned monic
}

TEST(RatFun, CancelsCommonFactors) {
    RatFun p = RatFun::p();
    EXPECT_EQ((p * p - 1) / (p - 1), p + 1);
    RatFun xi = RatFun::xi(), z = RatFun::z();
    RatFun u = (p * xi + z * z) * (xi - p) / ((xi - p) * (z + p * p * xi));
    EXPECT_EQ(u, (p * xi + z * z) / (z + p * p * xi));
}

TEST(RatFun, Substitution) {
    RatFun p = RatFun::p(), z = RatFun::z();
    RatFun a = (p.pow(4) - z) / (RatFun(1) - z);
    EXPECT_EQ(a.substitute(VarP, Rational(1)), RatFun(1));
    EXPECT_EQ(a.evaluate(2, 0, Rational(1, 2)), Rational(31));
}

TEST(RatFun, SeriesExpansionWithQuarterH) {
    // p = e^{h/4}: xi/(1+p^2) = xi/2 - h xi/8 + ...
    RatFun s = RatFun::xi() / (RatFun(1) + RatFun::p() * RatFun::p());
    TruncSeries t = s.to_series(3);
    EXPECT_EQ(t.coeff(0, 1), Rational(1, 2));
    EXPECT_EQ(t.coeff(1, 1), Rational(-1, 8));
    EXPECT_THROW(RatFun::z().to_series(2), std::domain_error);
}

TEST(RatFun, ZeroDivisionThrows) { EXPECT_ANY_THROW(RatFun(1) / RatFun(0)); }
