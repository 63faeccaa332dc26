#pragma once

// Boundary behaviour of the hybrid twist: xi -> 0 gives the Drinfeld-Jimbo
// objects, h -> 0 gives the canonical Jordanian ones.

#include "twistkit/rep/rep.hpp"
#include "twistkit/twist/rmatrix.hpp"

namespace twistkit {

inline Element set_xi_zero(const Element& x) {
    return x.map_coeffs([](const TruncSeries& s) { return s.set_xi_zero(); });
}
inline Element set_h_zero(const Element& x) {
    return x.map_coeffs([](const TruncSeries& s) { return s.set_h_zero(); });
}

inline VerificationReport verify_limits(int N) {
    VerificationReport rep;
    const Presentation sl = Presentation::Sl2;
    TwistElement Fqj = build_twist(TwistKind::QJ, sl, N);
    TwistElement Fj = build_twist(TwistKind::CanonicalJordanian, sl, N);

    Element d = set_xi_zero(Fqj.value) - Element::one(sl, 2, N);
    rep.add("limits/F_qJ-xi-zero", "F_qJ(h,0) = 1(x)1", d.is_zero(), residual_of(d));
    d = set_h_zero(Fqj.value) - Fj.value;
    rep.add("limits/F_qJ-h-zero", "F_qJ(0,xi) = F_J^c", d.is_zero(), residual_of(d));

    // U_qJ corners through the coproducts of the generators
    for (Presentation pres : {Presentation::Borel, Presentation::Sl2}) {
        TwistElement F = build_twist(TwistKind::QJ, pres, N);
        TwistElement J = build_twist(TwistKind::CanonicalJordanian, pres, N);
        std::string res0 = "0", resh = "0";
        bool ok0 = true, okh = true;
        for (const auto& g : generator_names(pres)) {
            Element x = generator(pres, g, N);
            Element dq = apply_twist(F, x);
            Element r0 = set_xi_zero(dq) - coproduct_std(x);
            // products in U_h reorder with h-dependent constants; compare at h = 0 on both sides
            Element rh = set_h_zero(dq) - set_h_zero(apply_twist(J, x));
            if (ok0 && !r0.is_zero()) ok0 = false, res0 = "[" + g + "] " + residual_of(r0);
            if (okh && !rh.is_zero()) okh = false, resh = "[" + g + "] " + residual_of(rh);
        }
        std::string tag = presentation_name(pres);
        rep.add("limits/U_qJ-xi-zero-" + tag, "U_qJ(h,0) = U_h: Delta_qJ|xi=0 = Delta", ok0, res0);
        rep.add("limits/U_qJ-h-zero-" + tag, "U_qJ(0,xi) = U_J: Delta_qJ|h=0 = Delta_J", okh, resh);
    }

    Element Rs = build_R_std(N);
    Element Rqj = twist_R(Fqj, Rs);
    d = set_xi_zero(Rqj) - Rs;
    rep.add("limits/R_qJ-xi-zero", "R_qJ^DJ(h,0) = R^DJ", d.is_zero(), residual_of(d));
    d = set_h_zero(Rqj) - flip(Fj.value) * Fj.inverse;
    rep.add("limits/R_qJ-h-zero", "R_qJ^DJ(0,xi) = (F_J^c)21 (F_J^c)^{-1}", d.is_zero(), residual_of(d));

    // h -> 0 in the 4-dim representation: p = 1 exactly
    {
        RatFun one(1), xi = RatFun::xi();
        RepMatrix FJ = RepMatrix::identity(4) + xi * kron(fundamental_rep("H", one), fundamental_rep("E+", one));
        RepMatrix RJ = FJ.permute(flip_perm4()) * FJ.inverse();
        RepMatrix Rm = rep_twisted_R(one, xi);
        rep.add("limits/jordanian-matrix", "d(R_qJ) at q = 1 equals d(F21 F^{-1}) for F_J^c", Rm == RJ,
                Rm == RJ ? "0" : "nonzero matrix");
        RepMatrix D = build_drm(one, xi, RatFun(0));
        RepMatrix P = RJ.permute(flip_perm4());
        rep.add("limits/jordanian-matrix-drm", "hybrid matrix at q = 1, z = 0 is the Jordanian matrix", D == P,
                D == P ? "0" : "nonzero matrix");
    }
    return rep;
}

// Twisted Hopf structure of U_qJ(sl2): coassociativity of Delta_qJ and both
// antipode axioms for S_qJ.
inline VerificationReport verify_twisted_hopf(int N) {
    HopfMaps tw = twisted_hopf(build_twist(TwistKind::QJ, Presentation::Sl2, N));
    return verify_hopf_axioms(tw, "hopf/twisted-qJ-sl2");
}

}  // namespace twistkit
