#pragma once

// Truncated universal R-matrices, their twists, and the classical r-matrix.

#include "twistkit/rep/matrix.hpp"
#include "twistkit/twist/twist.hpp"

#include <map>

namespace twistkit {

// [n] = (e^{nh/2} - e^{-nh/2})/(e^{h/2} - e^{-h/2}) as a series
inline TruncSeries q_number(int n, int N) {
    const int M = N + 1;
    TruncSeries h = TruncSeries::h(M);
    TruncSeries num = series_exp(h * Rational(n, 2)) - series_exp(h * Rational(-n, 2));
    TruncSeries den = series_exp(h * Rational(1, 2)) - series_exp(h * Rational(-1, 2));
    return series_div_val(num, den);
}

inline TruncSeries q_factorial(int n, int N) {
    TruncSeries f = TruncSeries::constant(1, N);
    for (int k = 2; k <= n; ++k) f = f * q_number(k, N);
    return f;
}

// R_q = e^{hH(x)H} sum_n (1 - e^{-h})^n/[n]! (E-(x)E+)^n e^{h n(n-1)/4}
inline Element build_R_std(int N) {
    const Presentation pres = Presentation::Sl2;
    Element H = generator(pres, "H", N);
    Element X = tensor(generator(pres, "E-", N), generator(pres, "E+", N));
    TruncSeries h = TruncSeries::h(N);
    TruncSeries a = TruncSeries::constant(1, N) - series_exp(-h);
    Element sum = Element::one(pres, 2, N), Xn = sum;
    TruncSeries an = TruncSeries::constant(1, N);
    for (int n = 1; n <= N; ++n) {
        Xn = Xn * X;
        an = an * a;
        TruncSeries c = an * series_inverse(q_factorial(n, N)) * series_exp(h * Rational(n * (n - 1), 4));
        sum += Xn * c;
    }
    return element_exp(tensor(H, H) * h) * sum;
}

// R_F = F21 R F^{-1}
inline Element twist_R(const TwistElement& F, const Element& R) {
    if (R.scalar_part().constant_term() != 1) throw std::invalid_argument("twist_R: R must start with 1(x)1");
    return flip(F.value) * R * F.inverse;
}

// Delta^op(x) R - R Delta(x), over the given coproduct.
inline Element quasitriangularity_residual(WordMap& delta, const Element& R, const Element& x) {
    Element d = delta.apply(x);
    return flip(d) * R - R * d;
}

// Classical r-matrix: coefficients of A(x)B over the basis {H, E+, E-},
// polynomial in zeta.
struct ClassicalR {
    std::map<std::pair<std::string, std::string>, ZetaPoly> terms;

    ClassicalR& add(const std::string& a, const std::string& b, ZetaPoly c) {
        auto& slot = terms[{a, b}];
        if (slot.size() < c.size()) slot.resize(c.size());
        for (size_t k = 0; k < c.size(); ++k) slot[k] += c[k];
        slot = zeta_trim(slot);
        if (slot.empty()) terms.erase({a, b});
        return *this;
    }
    friend bool operator==(const ClassicalR& a, const ClassicalR& b) { return a.terms == b.terms; }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms) {
            if (!out.empty()) out += " + ";
            out += "(" + zeta_to_string(c) + ") " + k.first + "(x)" + k.second;
        }
        return out;
    }

    // matrix of r at a rational zeta in the classical 2-dim representation
    QMatrix evaluate(const Rational& zeta) const;
};

// E+^H + zeta (H(x)H + E-(x)E+)
inline ClassicalR hybrid_classical_r() {
    ClassicalR r;
    r.add("E+", "H", {1}).add("H", "E+", {-1}).add("H", "H", {0, 1}).add("E-", "E+", {0, 1});
    return r;
}

inline std::string classical_generator_name(const Word& w) {
    if (w.a == 0 && w.b == 1 && w.c == 0) return "H";
    if (w.a == 0 && w.b == 0 && w.c == 1) return "E+";
    if (w.a == 1 && w.b == 0 && w.c == 0) return "E-";
    return "";
}

// h -> zeta*xi, then the xi^1 coefficient read in the classical basis.
inline ClassicalR extract_classical_r(const Element& R) {
    if (R.order() < 2) throw std::invalid_argument("extract_classical_r: need order >= 2");
    if (R.degree() != 2 || R.presentation() != Presentation::Sl2)
        throw std::invalid_argument("extract_classical_r: expects an sl2 tensor square element");
    ClassicalR r;
    for (const auto& [m, s] : R.terms()) {
        auto sub = series_subst_symbolic(s);
        auto it = sub.find(1);
        if (it == sub.end()) continue;
        std::string a = classical_generator_name(m.w[0]), b = classical_generator_name(m.w[1]);
        if (a.empty() || b.empty())
            throw std::domain_error("extract_classical_r: first-order term outside the classical basis: " +
                                    word_to_string(R.presentation(), m.w[0]) + " (x) " +
                                    word_to_string(R.presentation(), m.w[1]));
        r.add(a, b, it->second);
    }
    return r;
}

inline QMatrix classical_image(const std::string& g) {
    if (g == "H") return QMatrix::from_rows({{Rational(1, 2), 0}, {0, Rational(-1, 2)}});
    if (g == "E+") return QMatrix::unit(2, 0, 1, 1);
    if (g == "E-") return QMatrix::unit(2, 1, 0, 1);
    throw std::invalid_argument("classical_image: unknown generator " + g);
}

inline QMatrix ClassicalR::evaluate(const Rational& zeta) const {
    QMatrix m(4, 4);
    for (const auto& [k, c] : terms) {
        Rational v = 0, zp = 1;
        for (const auto& ck : c) {
            v += ck * zp;
            zp *= zeta;
        }
        m = m + v * kron(classical_image(k.first), classical_image(k.second));
    }
    return m;
}

// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] in the 8-dim tensor cube
inline QMatrix cybe_bracket(const QMatrix& r) {
    QMatrix I = QMatrix::identity(2);
    QMatrix r12 = kron(r, I), r23 = kron(I, r);
    // swap tensor factors 2 and 3: index 4a + 2b + c -> 4a + 2c + b
    std::vector<int> p23(8);
    for (int k = 0; k < 8; ++k) p23[k] = (k & 4) | ((k & 1) << 1) | ((k & 2) >> 1);
    QMatrix r13 = r12.permute(p23);
    auto br = [](const QMatrix& a, const QMatrix& b) { return a * b - b * a; };
    return br(r12, r13) + br(r12, r23) + br(r13, r23);
}

inline VerificationReport check_cybe(const ClassicalR& r, const std::string& prefix,
                                     const std::vector<Rational>& zetas = {0, 1, 2, -1}) {
    VerificationReport rep;
    for (const auto& z : zetas) {
        QMatrix b = cybe_bracket(r.evaluate(z));
        rep.add(prefix + "/cybe[zeta=" + to_string(z) + "]", "[[r,r]] = 0", b.is_zero(),
                b.is_zero() ? "0" : "nonzero 8x8 bracket");
    }
    return rep;
}

inline VerificationReport verify_rmatrix(int N, const std::vector<Rational>& zetas = {0, 1, 2, -1}) {
    VerificationReport rep;
    const Presentation pres = Presentation::Sl2;
    Element R = build_R_std(N);
    TwistElement F = build_twist(TwistKind::QJ, pres, N);
    Element RqJ = twist_R(F, R);

    HopfMaps std_maps = HopfMaps::standard(pres, N);
    HopfMaps tw = twisted_hopf(F);
    for (const char* g : {"H", "E+", "E-"}) {
        Element x = generator(pres, g, N);
        Element d1 = quasitriangularity_residual(std_maps.delta, R, x);
        rep.add(std::string("rmatrix/R_q-quasitriangular-") + g, "Delta^op(x) R_q = R_q Delta(x)", d1.is_zero(),
                residual_of(d1));
        Element d2 = quasitriangularity_residual(tw.delta, RqJ, x);
        rep.add(std::string("rmatrix/R_qJ-quasitriangular-") + g, "Delta_qJ^op(x) R_qJ = R_qJ Delta_qJ(x)",
                d2.is_zero(), residual_of(d2));
    }

    // e^{omega(x)H} e^{-hH(x)H} R_q e^{hH(x)H} e^{-H(x)omega}
    {
        Element H = generator(pres, "H", N);
        Element omega = build_sigma_omega(pres, N).omega;
        Element hHH = tensor(H, H) * TruncSeries::h(N);
        Element printed = element_exp(tensor(omega, H)) * element_exp(-hHH) * R * element_exp(hHH) *
                          element_exp(-tensor(H, omega));
        Element d = printed - RqJ;
        rep.add("rmatrix/R_qJ-closed-form", "R_qJ = e^{omega(x)H} e^{-hH(x)H} R_q e^{hH(x)H} e^{-H(x)omega}",
                d.is_zero(), residual_of(d));
    }

    ClassicalR r = extract_classical_r(RqJ);
    ClassicalR expect = hybrid_classical_r();
    Check c{"rmatrix/classical-r", "r_qJ = E+^H + zeta(H(x)H + E-(x)E+)", r == expect ? "pass" : "fail",
            r == expect ? "0" : r.to_string(), "", ""};
    rep.add(c);
    rep.merge(check_cybe(r, "rmatrix/r_qJ", zetas));

    ClassicalR bad;
    bad.add("E+", "E-", {1});
    QMatrix b = cybe_bracket(bad.evaluate(0));
    rep.add("rmatrix/cybe-negative-control", "[[r,r]] != 0 for r = E+(x)E-", !b.is_zero(),
            b.is_zero() ? "bracket vanished" : "nonzero (expected)");
    return rep;
}

}  // namespace twistkit
