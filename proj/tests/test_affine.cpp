#include "twistkit/affine/affine.hpp"

#include <gtest/gtest.h>

using namespace twistkit;

namespace {
RatFun P() { return RatFun::p(); }
RatFun Q() { return RatFun::p() * RatFun::p(); }
}  // namespace

TEST(Affine, CartanData) {
    EXPECT_EQ(cartan_entry(0, 0), 2);
    EXPECT_EQ(cartan_entry(0, 1), -2);
    EXPECT_EQ(root_pairing(kL0, kL1), -2);
    EXPECT_EQ(root_pairing(kDelta, kL0), 0);
    EXPECT_EQ(root_pairing(kDelta, kDelta), 0);
}

TEST(Affine, RelationsHoldSymbolically) {
    VerificationReport r = verify_affine_relations();
    EXPECT_EQ(r.checks.size(), 20u);
    for (const auto& c : r.checks) EXPECT_EQ(c.status, "pass") << c.check_id;
}

TEST(Affine, EvaluationMap) {
    RatFun z = RatFun::z();
    EXPECT_THROW(eval_rep_affine("D", z), std::invalid_argument);
    RepMatrix H0 = eval_rep_affine("H0", z), E0 = eval_rep_affine("E+l0", z);
    EXPECT_EQ(commutator(H0, E0), E0);
    EXPECT_EQ(eval_rep_affine("H1", z), RatFun(-1) * H0);
}

TEST(Affine, QAdjoint) {
    RatFun z = RatFun::z();
    RepMatrix a = eval_rep_affine("E+l0", z), b = eval_rep_affine("H0", z);
    EXPECT_EQ(q_adjoint(a, kDelta, b, kL0, Q()), commutator(a, b));  // pairing 0
    EXPECT_TRUE(q_adjoint(a, kL0, a, kL0, Q()).is_zero());             // x^2 = 0 for nilpotent images
    RepMatrix c = eval_rep_affine("E+l1", z);
    EXPECT_EQ(q_adjoint(a, kL0, c, kL1, Q()), a * c - Q().pow(-2) * (c * a));
}

TEST(Affine, RootVectorsGradingAndSchur) {
    RatFun z = RatFun::z();
    RootVectors rv = build_root_vectors(3, z);
    EXPECT_EQ(rv.d[1], rv.dprime[1]);
    RatFun c = Q() * Q() - Q().pow(-2);
    EXPECT_EQ(rv.d[2], rv.dprime[2] - (c / RatFun(2)) * (rv.d[1] * rv.d[1]));
    for (int n = 0; n <= 3; ++n) {
        EXPECT_EQ(z_valuation(rv.l0[n]), n) << n;
        EXPECT_EQ(z_valuation(rv.l1[n]), n + 1) << n;
        if (n) {
            EXPECT_EQ(z_valuation(rv.d[n]), n) << n;
        }
    }
}

TEST(Affine, StandardBlockAtZeroZ) {
    // built at symbolic z (E_{-l1} carries 1/z), then z -> 0
    RatFun zero(0);
    RepMatrix R = build_affine_R(1, RatFun::z(), P()).map([](const RatFun& x) { return x.substitute(VarZ, Rational(0)); });
    ProjectiveResult pr = projective_compare(R, build_drm(Q(), zero, zero));
    EXPECT_TRUE(pr.match);
}

TEST(Affine, OrderSensitivity) {
    RatFun z = RatFun::z();
    RepMatrix R = build_affine_R(2, z, RatFun(2));
    EXPECT_NE(build_affine_R(2, z, RatFun(2), ProductOrder::SwappedProducts), R);
}

TEST(Affine, ConvergenceToHybridMatrix) {
    RatFun p(2), xi(1), z = RatFun::z();
    for (int n : {2, 4}) {
        RepMatrix A = build_affine_twisted_R(n, z, p, xi);
        EXPECT_GE(projective_z_valuation(A, build_drm(p * p, xi, z)), n) << n;
    }
}

TEST(Affine, TwistedPathsAndXiZero) {
    RatFun p(2), z = RatFun::z(), xi = RatFun::xi();
    EXPECT_EQ(build_affine_twisted_R(2, z, p, xi), build_affine_twisted_R_direct(2, z, p, xi));
    EXPECT_EQ(build_affine_twisted_R(2, z, p, RatFun(0)), build_affine_R(2, z, p));
}

TEST(Affine, ProjectiveCompare) {
    RepMatrix M = build_drm(Q(), RatFun::xi(), RatFun::z());
    EXPECT_EQ(projective_compare(M, M).scalar, RatFun(1));
    ProjectiveResult r = projective_compare(RatFun(2) * M, M);
    EXPECT_TRUE(r.match);
    EXPECT_EQ(r.scalar, RatFun(2));
    EXPECT_THROW(projective_compare(M, RepMatrix(4, 4)), std::invalid_argument);
}

TEST(Affine, CoproductAtXiZeroIsPrimitive) {
    RatFun z1 = RatFun::z(), z2(Rational(1, 3));
    RepMatrix I = RepMatrix::identity(2);
    AffineCoproduct c = affine_twisted_coproduct("H1", z1, z2, RatFun(0));
    EXPECT_EQ(c.truth, kron(eval_rep_affine("H1", z1), I) + kron(I, eval_rep_affine("H1", z2)));
}

TEST(Affine, SuiteAtDefaults) {
    AffineConfig cfg;
    cfg.n_max_list = {2, 4};
    VerificationReport r = verify_affine(cfg);
    for (const auto& c : r.checks) EXPECT_TRUE(c.status == "pass" || c.status == "documented-misprint") << c.check_id;
    EXPECT_EQ(r.find("affine/coproduct-H0")->status, "pass");
    EXPECT_EQ(r.find("affine/coproduct-E+l0")->status, "documented-misprint");
}
