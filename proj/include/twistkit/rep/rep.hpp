#pragma once

// The 2-dim fundamental representation over Q(p, xi, z), q = p^2, the hybrid
// 4x4 R-matrix and exact QYBE checks.

#include "twistkit/rep/matrix.hpp"
#include "twistkit/twist/rmatrix.hpp"

#include <optional>
#include <random>

namespace twistkit {

// H -> diag(1/2,-1/2), E+ -> e12, E- -> q e21, e^{+-hH} -> diag(q^{+-1}, q^{-+1}).
// The factor q on E- makes [E+,E-] = (e^{hH} - e^{-hH})/(1 - e^{-h}) hold exactly.
inline RepMatrix fundamental_rep(const std::string& g, const RatFun& p = RatFun::p()) {
    RatFun q = p * p;
    if (g == "H") return RepMatrix::from_rows({{RatFun(Rational(1, 2)), RatFun()}, {RatFun(), RatFun(Rational(-1, 2))}});
    if (g == "E+" || g == "E") return RepMatrix::unit(2, 0, 1, RatFun(1));
    if (g == "E-") return RepMatrix::unit(2, 1, 0, q);
    if (g == "K") return RepMatrix::from_rows({{q, RatFun()}, {RatFun(), q.inv()}});
    if (g == "Kinv") return RepMatrix::from_rows({{q.inv(), RatFun()}, {RatFun(), q}});
    throw std::invalid_argument("fundamental_rep: unknown generator " + g);
}

inline RepMatrix identity_rep(int n) { return RepMatrix::identity(n); }

// ---- exact functions of upper triangular 2x2 matrices ----------------------

inline void require_triangular(const RepMatrix& M) {
    if (M.rows() != 2 || M.cols() != 2 || !M.is_upper_triangular())
        throw std::domain_error("expected an upper triangular 2x2 matrix");
    if (M(0, 0).is_zero() || M(1, 1).is_zero()) throw std::domain_error("non-invertible diagonal");
}

// square root of a rational function when it is a perfect square of one
inline std::optional<RatFun> ratfun_sqrt(const RatFun& x) {
    if (x.is_constant()) {
        Rational r;
        if (!rational_sqrt(x.constant_value(), r)) return std::nullopt;
        return RatFun(r);
    }
    // monomial c * p^{2k}: the only shape that arises from diagonals of q-powers
    auto mono_root = [](const Poly& f) -> std::optional<Poly> {
        if (f.terms().size() != 1) return std::nullopt;
        const auto& [e, c] = *f.terms().begin();
        Rational r;
        if (e[VarP] % 2 || e[VarXi] % 2 || e[VarZ] % 2 || !rational_sqrt(c, r)) return std::nullopt;
        return Poly::monomial({e[0] / 2, e[1] / 2, e[2] / 2}, r);
    };
    auto n = mono_root(x.num()), d = mono_root(x.den());
    if (!n || !d) return std::nullopt;
    return RatFun(*n, *d);
}

// [[a,b],[0,d]]^{1/2} = [[sqrt a, b/(sqrt a + sqrt d)], [0, sqrt d]]
inline RepMatrix tri_sqrt(const RepMatrix& M) {
    require_triangular(M);
    auto ra = ratfun_sqrt(M(0, 0)), rd = ratfun_sqrt(M(1, 1));
    if (!ra || !rd) throw std::domain_error("tri_sqrt: diagonal has no square root in the field");
    RepMatrix S(2, 2);
    S(0, 0) = *ra;
    S(1, 1) = *rd;
    S(0, 1) = M(0, 1) / (*ra + *rd);
    return S;
}

inline RepMatrix tri_inv(const RepMatrix& M) {
    require_triangular(M);
    RepMatrix I(2, 2);
    I(0, 0) = M(0, 0).inv();
    I(1, 1) = M(1, 1).inv();
    I(0, 1) = -M(0, 1) / (M(0, 0) * M(1, 1));
    return I;
}

// M^{k/2}, k integer
inline RepMatrix tri_half_power(const RepMatrix& M, int k) {
    RepMatrix base = k % 2 ? tri_sqrt(M) : M;
    int e = k % 2 ? k : k / 2;
    if (e < 0) {
        base = tri_inv(base);
        e = -e;
    }
    RepMatrix r = RepMatrix::identity(2);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

// Block-diagonal diag(M^{w_1}, M^{w_2}, ...) with half-integer weights:
// the image of e^{H(x)X} when M is the image of e^X.
inline RepMatrix weighted_power(const RepMatrix& M, const std::vector<Rational>& w) {
    const int n = M.rows();
    RepMatrix out(n * static_cast<int>(w.size()), n * static_cast<int>(w.size()));
    for (size_t b = 0; b < w.size(); ++b) {
        Rational twice = 2 * w[b];
        if (twice.get_den() != 1) throw std::domain_error("weighted_power: weights must be half-integers");
        RepMatrix blk = tri_half_power(M, static_cast<int>(twice.get_num().get_si()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out(static_cast<int>(b) * n + i, static_cast<int>(b) * n + j) = blk(i, j);
    }
    return out;
}

// ---- twists and R-matrices in the 4-dim representation ---------------------

// d(e^{hH(x)H}) = diag(p, 1/p, 1/p, p)
inline RepMatrix rep_reshetikhin(const RatFun& p = RatFun::p()) {
    RepMatrix m(4, 4);
    m(0, 0) = p;
    m(1, 1) = p.inv();
    m(2, 2) = p.inv();
    m(3, 3) = p;
    return m;
}

// d(e^omega) = (1 + xi E) e^{hH}
inline RepMatrix rep_exp_omega(const RatFun& p = RatFun::p(), const RatFun& xi = RatFun::xi()) {
    return (RepMatrix::identity(2) + xi * fundamental_rep("E+", p)) * fundamental_rep("K", p);
}

// d(F_qJ) = weighted_power(d(e^omega), (1/2, -1/2)) d(e^{-hH(x)H})
inline RepMatrix rep_twist(const RatFun& p = RatFun::p(), const RatFun& xi = RatFun::xi()) {
    return weighted_power(rep_exp_omega(p, xi), {Rational(1, 2), Rational(-1, 2)}) * rep_reshetikhin(p).inverse();
}

// d(R_q): the sum stops at n = 1 since (E- (x) E+)^2 = 0 in this representation
inline RepMatrix rep_R_std(const RatFun& p = RatFun::p()) {
    RatFun q = p * p;
    RepMatrix X = kron(fundamental_rep("E-", p), fundamental_rep("E+", p));
    return rep_reshetikhin(p) * (RepMatrix::identity(4) + (RatFun(1) - q.pow(-2)) * X);
}

// d(F21 R_q F^{-1})
inline RepMatrix rep_twisted_R(const RatFun& p = RatFun::p(), const RatFun& xi = RatFun::xi()) {
    RepMatrix F = rep_twist(p, xi);
    return F.permute(flip_perm4()) * rep_R_std(p) * F.inverse();
}

// textbook Drinfeld-Jimbo matrix p * P d(R_q) P
inline RepMatrix rep_R_dj(const RatFun& p = RatFun::p()) { return p * rep_R_std(p).permute(flip_perm4()); }

// The bracketed hybrid matrix with a1 = (q^2-z)/(1-z), a2 = (q^2-1)/(1-z), s = xi/(1+q).
inline RepMatrix build_drm(const RatFun& q, const RatFun& xi, const RatFun& z) {
    RatFun one(1), zero;
    RatFun a1 = (q * q - z) / (one - z), a2 = (q * q - one) / (one - z), s = xi / (one + q);
    return RepMatrix::from_rows({{a1, s * q, -s, s * s},
                                 {zero, q, a2, s},
                                 {zero, z * a2, q, -s * q},
                                 {zero, zero, zero, a1}});
}

// c with A = c B, if any
inline std::optional<RatFun> projective_ratio(const RepMatrix& A, const RepMatrix& B) {
    std::optional<RatFun> c;
    for (int i = 0; i < A.rows() && !c; ++i)
        for (int j = 0; j < A.cols() && !c; ++j)
            if (!B(i, j).is_zero()) c = A(i, j) / B(i, j);
    if (!c) return A.is_zero() ? std::optional<RatFun>(RatFun(1)) : std::nullopt;
    if (A != *c * B) return std::nullopt;
    return c;
}

// ---- QYBE -------------------------------------------------------------------

using SpectralMatrix = std::function<RepMatrix(const RatFun&)>;

inline std::vector<int> perm23() {
    std::vector<int> p(8);
    for (int k = 0; k < 8; ++k) p[k] = (k & 4) | ((k & 1) << 1) | ((k & 2) >> 1);
    return p;
}

// R12(z1/z2) R13(z1/z3) R23(z2/z3) - R23(z2/z3) R13(z1/z3) R12(z1/z2)
inline RepMatrix qybe_residual(const SpectralMatrix& R, const RatFun& z1, const RatFun& z2, const RatFun& z3) {
    RepMatrix I = RepMatrix::identity(2);
    RepMatrix R12 = kron(R(z1 / z2), I);
    RepMatrix R23 = kron(I, R(z2 / z3));
    RepMatrix R13 = kron(R(z1 / z3), I).permute(perm23());
    return R12 * R13 * R23 - R23 * R13 * R12;
}

inline Check qybe_check(const SpectralMatrix& R, const RatFun& z1, const RatFun& z2, const RatFun& z3,
                        const std::string& id) {
    RepMatrix d = qybe_residual(R, z1, z2, z3);
    int nz = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) nz += !d(i, j).is_zero();
    return {id, "R12(z1/z2) R13(z1/z3) R23(z2/z3) = R23(z2/z3) R13(z1/z3) R12(z1/z2)", nz == 0 ? "pass" : "fail",
            nz == 0 ? "0" : std::to_string(nz) + " nonzero entries", "", ""};
}

// ---- cross-tier bridge --------------------------------------------------------

using SeriesMatrix = Matrix<TruncSeries>;

inline SeriesMatrix series_matrix(const RepMatrix& M, int N) {
    SeriesMatrix out(M.rows(), M.cols(), TruncSeries(N));
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) out(i, j) = M(i, j).to_series(N);
    return out;
}

inline RepMatrix word_image(Presentation pres, const Word& w) {
    RepMatrix r = RepMatrix::identity(2);
    auto times = [&](const std::string& g, int e) {
        RepMatrix m = fundamental_rep(g);
        for (int k = 0; k < e; ++k) r = r * m;
    };
    if (pres == Presentation::Borel) {
        times("E+", w.a);
        times("H", w.b);
    } else {
        times("E-", w.a);
        times("H", w.b);
        times("E+", w.c);
    }
    return r;
}

// Matrix image of a degree-1 or degree-2 element, with q = e^{h/2} expanded.
inline SeriesMatrix evaluate_in_rep(const Element& x) {
    const int N = x.order(), deg = x.degree();
    if (deg < 1 || deg > 2) throw std::invalid_argument("evaluate_in_rep: degree must be 1 or 2");
    const int dim = deg == 1 ? 2 : 4;
    SeriesMatrix out(dim, dim, TruncSeries(N));
    std::map<Word, SeriesMatrix> cache;
    auto img = [&](const Word& w) -> const SeriesMatrix& {
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, series_matrix(word_image(x.presentation(), w), N)).first;
        return it->second;
    };
    for (const auto& [m, s] : x.terms()) {
        SeriesMatrix t = deg == 1 ? img(m.w[0]) : kron(img(m.w[0]), img(m.w[1]));
        out = out + s * t;
    }
    return out;
}

// ---- suite ------------------------------------------------------------------

// (p, xi) in {(2,1), (3,1/2), (5,2)} as (q, xi) pairs, plus (q, xi) = (2, 1)
inline std::vector<std::pair<Rational, Rational>> default_qybe_grid() {
    return {{4, 1}, {9, Rational(1, 2)}, {25, 2}, {2, 1}};
}

inline VerificationReport verify_qybe(const std::vector<std::pair<Rational, Rational>>& q_xi,
                                      const std::array<Rational, 3>& zs) {
    VerificationReport rep;
    for (const auto& [q, xi] : q_xi) {
        SpectralMatrix R = [q = q, xi = xi](const RatFun& z) { return build_drm(RatFun(q), RatFun(xi), z); };
        std::string tag = "[q=" + to_string(q) + ",xi=" + to_string(xi) + "]";
        rep.add(qybe_check(R, RatFun(zs[0]), RatFun(zs[1]), RatFun(zs[2]), "qybe/drm" + tag));
    }
    // negative control: entry (1,2) shifted by 1
    const auto& [q0, xi0] = q_xi.front();
    SpectralMatrix bad = [q = q0, xi = xi0](const RatFun& z) {
        RepMatrix m = build_drm(RatFun(q), RatFun(xi), z);
        m(0, 1) = m(0, 1) + RatFun(1);
        return m;
    };
    Check c = qybe_check(bad, RatFun(zs[0]), RatFun(zs[1]), RatFun(zs[2]), "qybe/negative-control");
    c.paper_anchor = "perturbed matrix violates QYBE";
    const bool detected = c.status == "fail";
    c.status = detected ? "pass" : "fail";
    if (!detected) c.residual = "perturbation not detected";
    rep.add(c);
    return rep;
}

// Representation-tier identities: morphism on the defining relations, the
// hybrid matrix against the twisted R-matrix image, the standard limit and
// cross-tier agreement with the symbolic tier at order N.
inline VerificationReport verify_rep(int N) {
    VerificationReport rep;
    RatFun p = RatFun::p(), q = p * p, xi = RatFun::xi(), one(1);
    auto fr = [&](const char* g) { return fundamental_rep(g, p); };
    RepMatrix I = RepMatrix::identity(2);

    {
        RepMatrix a = fr("H") * fr("E+") - fr("E+") * fr("H") - fr("E+");
        RepMatrix b = fr("H") * fr("E-") - fr("E-") * fr("H") + fr("E-");
        RepMatrix c = fr("E+") * fr("E-") - fr("E-") * fr("E+") - (one / (one - q.pow(-2))) * (fr("K") - fr("Kinv"));
        bool ok = a.is_zero() && b.is_zero() && c.is_zero();
        rep.add("rep/relations", "[H,E+-] = +-E+-, [E+,E-] = (e^{hH}-e^{-hH})/(1-e^{-h})", ok, ok ? "0" : "nonzero matrix");
    }
    {
        RepMatrix M = rep_exp_omega(p, xi), S = tri_sqrt(M);
        RepMatrix W = weighted_power(M, {Rational(1, 2), Rational(-1, 2)});
        RepMatrix F = rep_twist(p, xi);
        bool ok = S * S == M && W * weighted_power(M, {Rational(-1, 2), Rational(1, 2)}) == RepMatrix::identity(4) &&
                  F * F.inverse() == RepMatrix::identity(4) && rep_twist(p, RatFun(0)) == RepMatrix::identity(4);
        rep.add("rep/triangular-reconstruction", "sqrt, inverse and weighted powers recombine to the input", ok,
                ok ? "0" : "nonzero matrix");
    }
    {
        RepMatrix lhs = build_drm(q, xi, RatFun(0));
        RepMatrix rhs = p.pow(3) * rep_twisted_R(p, xi).permute(flip_perm4());
        Check c{"rep/drm-vs-twisted-R", "hybrid matrix at z = 0 = g^{3/2} P d(F21 R_q F^{-1}) P with g = q",
                lhs == rhs ? "pass" : "fail", lhs == rhs ? "0" : "nonzero matrix", "", ""};
        rep.add(c);
        RepMatrix d0 = build_drm(q, RatFun(0), RatFun(0));
        RepMatrix dj = q * rep_R_dj(p);
        rep.add("rep/standard-limit", "hybrid matrix at xi = 0, z = 0 = q R_DJ", d0 == dj, d0 == dj ? "0" : "nonzero matrix");
        RepMatrix raw = p * rep_R_std(p).permute(flip_perm4());
        rep.add("rep/standard-limit-raw", "R_DJ = p P d(R_q) P", raw == rep_R_dj(p), raw == rep_R_dj(p) ? "0" : "nonzero matrix");
    }
    {
        const Presentation sl = Presentation::Sl2;
        TwistElement F = build_twist(TwistKind::QJ, sl, N);
        RepMatrix dF = rep_twist(p, xi), dFi = dF.inverse();
        RepMatrix dH = kron(fr("H"), I) + kron(I, fr("H"));
        RepMatrix dEm = kron(fr("E-"), fr("Kinv")) + kron(I, fr("E-"));
        bool okH = evaluate_in_rep(apply_twist(F, generator(sl, "H", N))) == series_matrix(dF * dH * dFi, N);
        rep.add("rep/cross-tier-H", "d(Delta_qJ(H)) = d(F)(H(x)1 + 1(x)H)d(F)^{-1}", okH, okH ? "0" : "term maps differ");
        bool okE = evaluate_in_rep(apply_twist(F, generator(sl, "E-", N))) == series_matrix(dF * dEm * dFi, N);
        rep.add("rep/cross-tier-E-", "d(Delta_qJ(E-)) = d(F) d(Delta(E-)) d(F)^{-1}", okE, okE ? "0" : "term maps differ");
        Element R = build_R_std(N);
        bool okR = evaluate_in_rep(R) == series_matrix(rep_R_std(p), N);
        rep.add("rep/cross-tier-R_q", "d(R_q) from the series equals the resummed matrix", okR, okR ? "0" : "term maps differ");
        bool okRJ = evaluate_in_rep(twist_R(F, R)) == series_matrix(rep_twisted_R(p, xi), N);
        rep.add("rep/cross-tier-R_qJ", "d(F21 R_q F^{-1}) from the series equals the resummed matrix", okRJ,
                okRJ ? "0" : "term maps differ");
    }
    return rep;
}

}  // namespace twistkit
