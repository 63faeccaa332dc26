#include "twistkit/pbw/hopf.hpp"

#include <gtest/gtest.h>

using namespace twistkit;

namespace {
const int N = 4;
}

TEST(Pbw, BorelExchangeRelation) {
    Element HE = normal_order("H E", Presentation::Borel, N);
    Element EH = normal_order("E H", Presentation::Borel, N);
    EXPECT_EQ(HE - EH, generator(Presentation::Borel, "E", N));
}

TEST(Pbw, Sl2CartanRelations) {
    const auto P = Presentation::Sl2;
    Element H = generator(P, "H", N), Ep = generator(P, "E+", N), Em = generator(P, "E-", N);
    EXPECT_EQ(H * Ep - Ep * H, Ep);
    EXPECT_EQ(H * Em - Em * H, -Em);
}

TEST(Pbw, Sl2DeformedCommutator) {
    // [E+,E-] = (e^{hH} - e^{-hH})/(1 - e^{-h}); the leading term is 2H
    const auto P = Presentation::Sl2;
    Element c = generator(P, "E+", N) * generator(P, "E-", N) - generator(P, "E-", N) * generator(P, "E+", N);
    const int M = N + 1;
    Element num = cartan_exp(P, M, 1) - cartan_exp(P, M, -1);
    TruncSeries den = TruncSeries::constant(1, M) - series_exp(-TruncSeries::h(M));
    Element expect(P, 1, N);
    for (const auto& [m, s] : num.terms()) expect.add_term(m, series_div_val(s, den));
    EXPECT_EQ(c, expect);
}

TEST(Pbw, ExpLogAndInverse) {
    const auto P = Presentation::Sl2;
    Element x = generator(P, "E+", N) * TruncSeries::xi(N) + generator(P, "H", N) * TruncSeries::h(N);
    EXPECT_EQ(element_log(element_exp(x)), x);
    Element e = element_exp(x);
    EXPECT_EQ(e * element_inverse(e), Element::one(P, 1, N));
}

TEST(Pbw, TensorFlipAndPlace) {
    const auto P = Presentation::Borel;
    Element H = generator(P, "H", N), E = generator(P, "E", N);
    EXPECT_EQ(flip(tensor(H, E)), tensor(E, H));
    Element one = Element::one(P, 1, N);
    EXPECT_EQ(place(tensor(H, E), 3, {0, 2}), tensor(tensor(H, one), E));
}

TEST(Hopf, CounitOfGenerators) {
    for (auto P : {Presentation::Borel, Presentation::Sl2})
        for (const auto& g : generator_names(P)) EXPECT_TRUE(counit(generator(P, g, N)).is_zero()) << g;
}

TEST(Hopf, AxiomsHoldForBothPresentations) {
    for (auto P : {Presentation::Borel, Presentation::Sl2}) {
        VerificationReport r = verify_hopf_axioms(P, N);
        EXPECT_EQ(r.checks.size(), 5u);
        for (const auto& c : r.checks) EXPECT_EQ(c.status, "pass") << c.check_id << " " << c.residual;
    }
}

TEST(Hopf, CorruptedCoproductIsDetected) {
    // Delta(E+) without the e^{hH} factor is not coassociative on E+ E-
    const auto P = Presentation::Sl2;
    GeneratorImages d = standard_coproduct_images(P, N);
    Element one = Element::one(P, 1, N), Ep = generator(P, "E+", N);
    d.raise = tensor(Ep, one) + tensor(one, Ep);
    HopfMaps bad(P, N, d, standard_antipode_images(P, N));
    VerificationReport r = verify_hopf_axioms(bad, "bad");
    const Check* c = r.find("bad/coassociativity");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, "fail");
    EXPECT_NE(c->residual.find("(1,0)"), std::string::npos) << c->residual;
}

TEST(Hopf, AntipodeOnGenerators) {
    const auto P = Presentation::Borel;
    Element E = generator(P, "E", N);
    EXPECT_EQ(antipode_std(E), -(cartan_exp(P, N, -1) * E));
}
