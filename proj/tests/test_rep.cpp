#include "twistkit/rep/rep.hpp"

#include <gtest/gtest.h>

using namespace twistkit;

namespace {
RatFun P() { return RatFun::p(); }
RatFun Q() { return RatFun::p() * RatFun::p(); }
RepMatrix diag2(const RatFun& a, const RatFun& b) { return RepMatrix::from_rows({{a, RatFun(0)}, {RatFun(0), b}}); }
}  // namespace

TEST(Rep, GeneratorImages) {
    EXPECT_EQ(fundamental_rep("H"), diag2(RatFun(Rational(1, 2)), RatFun(Rational(-1, 2))));
    EXPECT_EQ(fundamental_rep("K"), diag2(Q(), Q().inv()));
    EXPECT_THROW(fundamental_rep("D"), std::invalid_argument);
}

TEST(Rep, CommutatorImage) {
    RepMatrix c = fundamental_rep("E+") * fundamental_rep("E-") - fundamental_rep("E-") * fundamental_rep("E+");
    EXPECT_EQ(c, diag2(Q(), -Q()));
    RatFun one(1);
    RepMatrix c1 = fundamental_rep("E+", one) * fundamental_rep("E-", one) -
                   fundamental_rep("E-", one) * fundamental_rep("E+", one);
    EXPECT_EQ(c1, diag2(one, -one));  // classical sl2 at q = 1
}

TEST(Rep, TriangularFunctions) {
    RatFun xi = RatFun::xi(), zero(0);
    RepMatrix M = RepMatrix::from_rows({{Q(), xi}, {zero, Q().inv()}});
    RepMatrix S = tri_sqrt(M);
    EXPECT_EQ(S, RepMatrix::from_rows({{P(), xi / (P() + P().inv())}, {zero, P().inv()}}));
    EXPECT_EQ(S * S, M);
    EXPECT_EQ(tri_inv(diag2(Q(), Q().inv())), diag2(Q().inv(), Q()));
    EXPECT_EQ(weighted_power(RepMatrix::identity(2), {Rational(1, 2), Rational(-1, 2)}), RepMatrix::identity(4));
    RepMatrix L = RepMatrix::from_rows({{RatFun(1), zero}, {RatFun(1), RatFun(1)}});
    EXPECT_ANY_THROW(tri_sqrt(L));
    EXPECT_ANY_THROW(tri_sqrt(diag2(RatFun(2), RatFun(1))));  // sqrt(2) not in the field
}

TEST(Rep, TwistLimits) {
    EXPECT_EQ(rep_twist(P(), RatFun(0)), RepMatrix::identity(4));
    RatFun one(1), xi = RatFun::xi(), h(Rational(1, 2));
    RepMatrix expect = RepMatrix::identity(4);
    expect(0, 1) = h * xi;
    expect(2, 3) = -h * xi;
    EXPECT_EQ(rep_twist(one, xi), expect);  // canonical Jordanian image, (1,4) entry 0
    RepMatrix F = rep_twist();
    EXPECT_EQ(F * F.inverse(), RepMatrix::identity(4));
}

TEST(Rep, HybridMatrix) {
    RatFun q = Q(), xi = RatFun::xi(), z = RatFun::z(), one(1), zero(0);
    RepMatrix D = build_drm(q, xi, z);
    RatFun a1 = (q * q - z) / (one - z), s = xi / (one + q);
    EXPECT_EQ(D(0, 0), a1);
    EXPECT_EQ(D(0, 1), s * q);
    EXPECT_EQ(D(0, 2), -s);
    EXPECT_EQ(D(0, 3), s * s);
    RepMatrix D0 = build_drm(q, zero, zero);
    EXPECT_EQ(D0, RepMatrix::from_rows({{q * q, zero, zero, zero},
                                        {zero, q, q * q - one, zero},
                                        {zero, zero, q, zero},
                                        {zero, zero, zero, q * q}}));
    EXPECT_EQ(D0, q * rep_R_dj());
}

TEST(Rep, HybridMatrixIsTwistedR) {
    RepMatrix lhs = build_drm(Q(), RatFun::xi(), RatFun(0));
    EXPECT_EQ(lhs, P().pow(3) * rep_twisted_R().permute(flip_perm4()));
}

TEST(Rep, ProjectiveRatio) {
    RepMatrix M = build_drm(Q(), RatFun::xi(), RatFun::z());
    EXPECT_EQ(projective_ratio(M, M), RatFun(1));
    EXPECT_EQ(projective_ratio(RatFun(2) * M, M), RatFun(2));
    RepMatrix N = M;
    N(1, 1) = N(1, 1) + RatFun(1);
    EXPECT_FALSE(projective_ratio(N, M).has_value());
}

TEST(Qybe, DefaultGridAndControls) {
    VerificationReport r = verify_qybe(default_qybe_grid(), {Rational(1, 2), Rational(1, 3), Rational(1, 5)});
    for (const auto& c : r.checks) EXPECT_EQ(c.status, "pass") << c.check_id;
    SpectralMatrix id = [](const RatFun&) { return RepMatrix::identity(4); };
    EXPECT_EQ(qybe_check(id, RatFun(Rational(1, 2)), RatFun(Rational(1, 3)), RatFun(Rational(1, 5)), "id").status,
              "pass");
}

TEST(Qybe, SymbolicP) {
    SpectralMatrix R = [](const RatFun& z) { return build_drm(Q(), RatFun::xi(), z); };
    EXPECT_EQ(qybe_check(R, RatFun(Rational(1, 2)), RatFun(Rational(1, 3)), RatFun(Rational(1, 5)), "sym").status,
              "pass");
}

TEST(CrossTier, IdentityAndSuite) {
    Element one = Element::one(Presentation::Sl2, 2, 3);
    EXPECT_EQ(evaluate_in_rep(one), series_matrix(RepMatrix::identity(4), 3));
    VerificationReport r = verify_rep(4);
    for (const auto& c : r.checks) EXPECT_EQ(c.status, "pass") << c.check_id;
}

TEST(CrossTier, CommutatorIsRepresented) {
    const auto Pr = Presentation::Sl2;
    const int N = 3;
    Element Ep = generator(Pr, "E+", N), Em = generator(Pr, "E-", N);
    SeriesMatrix a = series_matrix(fundamental_rep("E+"), N), b = series_matrix(fundamental_rep("E-"), N);
    EXPECT_EQ(evaluate_in_rep(Ep * Em - Em * Ep), a * b - b * a);
}

TEST(Matrix, Serialization) {
    QMatrix m = QMatrix::from_rows({{Rational(1, 2), Rational(0)}, {Rational(-3), Rational(1)}});
    EXPECT_EQ(m.to_json().dump(), R"([["1/2","0"],["-3","1"]])");
    EXPECT_EQ(m * m.inverse(), QMatrix::identity(2));
}
