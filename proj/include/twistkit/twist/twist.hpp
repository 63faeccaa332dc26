#pragma once

// Jordanian-type twisting elements, twisted coproducts and the twist axioms.

#include "twistkit/pbw/hopf.hpp"

#include <string>

namespace twistkit {

enum class TwistKind { Trivial, CanonicalJordanian, TildeQJ, Reshetikhin, QJ, Custom };

inline const char* twist_kind_name(TwistKind k) {
    switch (k) {
        case TwistKind::Trivial: return "trivial";
        case TwistKind::CanonicalJordanian: return "canonical_jordanian";
        case TwistKind::TildeQJ: return "tilde_qJ";
        case TwistKind::Reshetikhin: return "reshetikhin";
        case TwistKind::QJ: return "qJ";
        case TwistKind::Custom: return "custom";
    }
    return "?";
}

struct SigmaOmega {
    Element sigma, omega, breve_E;
    Element exp_sigma, exp_omega;  // xi E + e^{hH} and (xi E + 1) e^{hH}
};

inline SigmaOmega build_sigma_omega(Presentation pres, int N) {
    Element E = raising(pres, N);
    Element one = Element::one(pres, 1, N);
    Element K = cartan_exp(pres, N, 1);
    TruncSeries xi = TruncSeries::xi(N);
    Element es = E * xi + K;
    Element eo = (E * xi + one) * K;
    return {element_log(es), element_log(eo), E - one + K, es, eo};
}

// e^a x e^{-a}
inline Element adjoint_exp(const Element& a, const Element& x) {
    return element_exp(a) * x * element_exp(-a);
}

inline Element invert_tensor_element(const Element& x) {
    Element one = Element::one(x.presentation(), x.degree(), x.order());
    if (x.scalar_part().constant_term() != 1 || (x - one).valuation() < 1)
        throw std::domain_error("invert_tensor_element: constant term must be 1(x)1");
    return element_inverse(x);
}

struct TwistElement {
    TwistKind kind;
    Element value;
    Element inverse;
    bool classical_base = false;  // twist of the undeformed algebra (h = 0 coproduct)

    HopfMaps base_maps() const {
        return classical_base ? HopfMaps::classical(value.presentation(), value.order())
                              : HopfMaps::standard(value.presentation(), value.order());
    }
};

inline TwistElement make_twist(const Element& value, TwistKind kind = TwistKind::Custom) {
    return {kind, value, invert_tensor_element(value)};
}

inline TwistElement build_twist(TwistKind kind, Presentation pres, int N) {
    Element H = generator(pres, "H", N);
    Element hHH = tensor(H, H) * TruncSeries::h(N);
    switch (kind) {
        case TwistKind::Trivial: {
            Element one = Element::one(pres, 2, N);
            return {kind, one, one};
        }
        case TwistKind::CanonicalJordanian: {
            Element one = Element::one(pres, 1, N);
            Element X = tensor(H, element_log(one + raising(pres, N) * TruncSeries::xi(N)));
            return {kind, element_exp(X), element_exp(-X), true};
        }
        case TwistKind::TildeQJ: {
            Element X = tensor(H, build_sigma_omega(pres, N).sigma);
            return {kind, element_exp(X), element_exp(-X)};
        }
        case TwistKind::Reshetikhin:
            return {kind, element_exp(hHH), element_exp(-hHH)};
        case TwistKind::QJ: {
            Element X = tensor(H, build_sigma_omega(pres, N).omega);
            return {kind, element_exp(X) * element_exp(-hHH), element_exp(hHH) * element_exp(-X)};
        }
        case TwistKind::Custom: break;
    }
    throw std::invalid_argument("build_twist: unsupported kind");
}

// F Delta(x) F^{-1}
inline Element apply_twist(const TwistElement& F, const Element& x) {
    if (F.classical_base) return F.value * F.base_maps().delta.apply(x) * F.inverse;
    return F.value * coproduct_std(x) * F.inverse;
}

// Delta_F on generators and S_F(a) = u S(a) u^{-1}, u = m(id (x) S)(F).
inline HopfMaps twisted_hopf(const TwistElement& F) {
    const Presentation pres = F.value.presentation();
    const int N = F.value.order();
    HopfMaps std_maps = F.base_maps();
    const auto& d = std_maps.delta.images();
    GeneratorImages dt{F.value * d.h * F.inverse, F.value * d.raise * F.inverse, Element(pres, 2, N)};
    if (pres == Presentation::Sl2) dt.lower = F.value * d.lower * F.inverse;
    Element u = multiply_slots(std_maps.antipode.apply(F.value, 1));
    Element ui = element_inverse(u);
    const auto& s = std_maps.antipode.images();
    GeneratorImages st{u * s.h * ui, u * s.raise * ui, Element(pres, 1, N)};
    if (pres == Presentation::Sl2) st.lower = u * s.lower * ui;
    return HopfMaps(pres, N, std::move(dt), std::move(st));
}

// Counit condition, cocycle equation, invertibility and (optionally) the
// factorized twist equations.
inline VerificationReport check_twist_axioms(const TwistElement& F, const std::string& prefix, bool factorized) {
    VerificationReport rep;
    const Presentation pres = F.value.presentation();
    const int N = F.value.order();
    HopfMaps maps = F.base_maps();
    Element one1 = Element::one(pres, 1, N);
    Element one2 = Element::one(pres, 2, N);

    Element c1 = counit_slot(F.value, 0) - one1;
    Element c2 = counit_slot(F.value, 1) - one1;
    bool ok_c = c1.is_zero() && c2.is_zero();
    rep.add(prefix + "/counit", "(eps(x)id)F = (id(x)eps)F = 1", ok_c, ok_c ? "0" : residual_of(c1.is_zero() ? c2 : c1));

    Element inv = F.value * F.inverse - one2;
    Element inv2 = F.inverse * F.value - one2;
    bool ok_i = inv.is_zero() && inv2.is_zero();
    rep.add(prefix + "/invertibility", "F F^{-1} = 1(x)1", ok_i, ok_i ? "0" : residual_of(inv.is_zero() ? inv2 : inv));

    Element F12 = place(F.value, 3, {0, 1});
    Element F23 = place(F.value, 3, {1, 2});
    Element dF1 = maps.delta.apply(F.value, 0);  // (Delta (x) id) F
    Element dF2 = maps.delta.apply(F.value, 1);  // (id (x) Delta) F
    Element cocycle = F12 * dF1 - F23 * dF2;
    rep.add(prefix + "/cocycle", "F12 (Delta(x)id)(F) = F23 (id(x)Delta)(F)", cocycle.is_zero(), residual_of(cocycle));

    if (factorized) {
        Element F13 = place(F.value, 3, {0, 2});
        Element f1 = dF1 - F13 * F23;
        rep.add(prefix + "/factorized-first", "(Delta(x)id)(F) = F13 F23", f1.is_zero(), residual_of(f1));
        HopfMaps tw = twisted_hopf(F);
        Element f2 = tw.delta.apply(F.value, 1) - F12 * F13;
        rep.add(prefix + "/factorized-second", "(id(x)Delta_F)(F) = F12 F13", f2.is_zero(), residual_of(f2));
    }
    return rep;
}

// The four twists of interest; the factorized equations only for the
// factorizable ones (F_qJ is not).
inline bool twist_factorizable(TwistKind k) {
    return k == TwistKind::CanonicalJordanian || k == TwistKind::TildeQJ || k == TwistKind::Reshetikhin;
}

inline VerificationReport verify_twist_axioms(int N) {
    VerificationReport rep;
    for (Presentation pres : {Presentation::Borel, Presentation::Sl2})
        for (TwistKind k : {TwistKind::CanonicalJordanian, TwistKind::TildeQJ, TwistKind::Reshetikhin, TwistKind::QJ}) {
            std::string prefix = std::string("twist/") + presentation_name(pres) + "/" + twist_kind_name(k);
            rep.merge(check_twist_axioms(build_twist(k, pres, N), prefix, twist_factorizable(k)));
        }
    // e^sigma is grouplike for the tilde twist
    for (Presentation pres : {Presentation::Borel, Presentation::Sl2}) {
        TwistElement F = build_twist(TwistKind::TildeQJ, pres, N);
        Element es = build_sigma_omega(pres, N).exp_sigma;
        Element d = apply_twist(F, es) - tensor(es, es);
        rep.add(std::string("twist/") + presentation_name(pres) + "/tilde_qJ/grouplike-e^sigma",
                "Delta~_qJ(e^sigma) = e^sigma(x)e^sigma", d.is_zero(), residual_of(d));
    }
    return rep;
}

}  // namespace twistkit
