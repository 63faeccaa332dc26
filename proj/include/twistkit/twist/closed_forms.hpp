#pragma once

// Printed closed forms of the twisted Hopf structures, compared against
// conjugation by the twisting element.

#include "twistkit/twist/twist.hpp"

namespace twistkit {

enum class ClosedTarget { QjtBor, QjBor, QjsiBor, QjSl2, QjsiSl };

inline const char* closed_target_name(ClosedTarget t) {
    switch (t) {
        case ClosedTarget::QjtBor: return "qjt-bor";
        case ClosedTarget::QjBor: return "qj-bor";
        case ClosedTarget::QjsiBor: return "qjsi-bor";
        case ClosedTarget::QjSl2: return "qj-sl2";
        case ClosedTarget::QjsiSl: return "qjsi-sl";
    }
    return "?";
}

inline Presentation closed_target_presentation(ClosedTarget t) {
    return (t == ClosedTarget::QjSl2 || t == ClosedTarget::QjsiSl) ? Presentation::Sl2 : Presentation::Borel;
}

inline TwistKind closed_target_twist(ClosedTarget t) {
    return t == ClosedTarget::QjtBor ? TwistKind::TildeQJ : TwistKind::QJ;
}

// Coefficientwise division by xi: order M -> M-1.  Throws if a xi^0 term survives.
inline Element divide_by_xi(const Element& x) {
    const int M = x.order();
    Element r(x.presentation(), x.degree(), M - 1);
    TruncSeries xi = TruncSeries::xi(M);
    for (const auto& [m, s] : x.terms()) {
        for (const auto& t : s.terms())
            if (t.dx == 0) throw std::domain_error("divide_by_xi: xi^0 term present");
        r.add_term(m, series_div_val(s, xi));
    }
    return r;
}

// Which of the printed generator lines a target carries.
// Generator names: "H", "E", "E+", "E-", "exp_sigma", "exp_omega".
inline bool closed_form_has(ClosedTarget t, const std::string& g) {
    switch (t) {
        case ClosedTarget::QjtBor: return g == "H" || g == "E" || g == "exp_sigma";
        case ClosedTarget::QjBor: return g == "H" || g == "E";
        case ClosedTarget::QjsiBor: return g == "H" || g == "exp_omega";
        case ClosedTarget::QjSl2: return g == "H" || g == "E+" || g == "E-";
        case ClosedTarget::QjsiSl: return g == "H" || g == "exp_omega" || g == "E-";
    }
    return false;
}

namespace detail {

// Numerator of a xi^{-1} line (built one order higher), or the full line.
struct ClosedLine {
    Element value;
    bool over_xi;
};

inline ClosedLine closed_line(ClosedTarget t, const std::string& g, int N, bool derived) {
    if (!closed_form_has(t, g)) throw std::invalid_argument(std::string("no printed line for ") + g + " in " +
                                                            closed_target_name(t));
    const Presentation pres = closed_target_presentation(t);
    const bool tilde = t == ClosedTarget::QjtBor;
    const bool over_xi = g == "E" || g == "E+";
    const int M = over_xi ? N + 1 : N;
    SigmaOmega so = build_sigma_omega(pres, M);
    const Element& rho = tilde ? so.sigma : so.omega;
    const Element& erho = tilde ? so.exp_sigma : so.exp_omega;
    Element H = generator(pres, "H", M);
    Element one = Element::one(pres, 1, M);
    Element one2 = Element::one(pres, 2, M);
    Element ad = tensor(H, rho);
    auto e_ad = [&](const Element& x) { return adjoint_exp(ad, x); };

    if (g == "H") return {tensor(H, one) + e_ad(tensor(one, H)), false};
    if (g == "exp_sigma" || g == "exp_omega") return {tensor(erho, erho), false};
    if (g == "E-") {
        Element Em = generator(pres, "E-", M);
        Element second = e_ad(tensor(one, Em));
        if (derived) second = tensor(cartan_exp(pres, M, 1), one) * second;
        return {tensor(Em, element_exp(-rho)) + second, false};
    }
    // E, E+
    if (tilde) {
        Element K = cartan_exp(pres, M, 1);
        return {tensor(erho, erho) - e_ad(tensor(K, K)), true};
    }
    Element Ki = cartan_exp(pres, M, -1);
    Element a = tensor(erho, erho), b = e_ad(tensor(Ki, Ki));
    return {(derived ? a * b : a - b) - one2, true};
}

}  // namespace detail

// Printed (or derived) right-hand side of a closed-form coproduct line at order N.
inline Element closed_form_coproduct(ClosedTarget t, const std::string& g, int N, bool derived = false) {
    auto line = detail::closed_line(t, g, N, derived);
    return line.over_xi ? divide_by_xi(line.value) : line.value;
}

// Ground truth: F Delta(g) F^{-1}.
inline Element twisted_image(ClosedTarget t, const std::string& g, int N) {
    const Presentation pres = closed_target_presentation(t);
    TwistElement F = build_twist(closed_target_twist(t), pres, N);
    Element x(pres, 1, N);
    if (g == "exp_sigma") {
        x = build_sigma_omega(pres, N).exp_sigma;
    } else if (g == "exp_omega") {
        x = build_sigma_omega(pres, N).exp_omega;
    } else {
        x = generator(pres, g, N);
    }
    return apply_twist(F, x);
}

// Residual of (line - truth); xi^{-1} lines are compared after multiplying the
// truth by xi, one order higher.
inline Element closed_form_residual(ClosedTarget t, const std::string& g, int N, bool derived) {
    auto line = detail::closed_line(t, g, N, derived);
    Element truth = twisted_image(t, g, N);
    if (!line.over_xi) return line.value - truth;
    return line.value - truth.with_order(N + 1) * TruncSeries::xi(N + 1);
}

namespace detail {

inline const char* printed_text(ClosedTarget t, const std::string& g) {
    const bool tilde = t == ClosedTarget::QjtBor;
    if (g == "H") return tilde ? "Delta(H) = H(x)1 + e^{ad(H(x)sigma)}(1(x)H)" : "Delta(H) = H(x)1 + e^{ad(H(x)omega)}(1(x)H)";
    if (g == "E") return tilde ? "Delta(E) = (1/xi)(e^sigma(x)e^sigma - e^{ad(H(x)sigma)}(e^{hH}(x)e^{hH}))"
                               : "Delta(E) = (1/xi)(e^omega(x)e^omega - e^{ad(H(x)omega)}(e^{-hH}(x)e^{-hH}) - 1(x)1)";
    if (g == "E+") return "Delta(E+) = (1/xi)(e^omega(x)e^omega - e^{ad(H(x)omega)}(e^{-hH}(x)e^{-hH}) - 1(x)1)";
    if (g == "E-") return "Delta(E-) = E-(x)e^{-omega} + e^{ad(H(x)omega)}(1(x)E-)";
    if (g == "exp_sigma") return "Delta(e^sigma) = e^sigma(x)e^sigma";
    return "Delta(e^omega) = e^omega(x)e^omega";
}

inline std::string derived_text(const std::string& g) {
    if (g == "E-") return "Delta(E-) = E-(x)e^{-omega} + (e^{hH}(x)1) e^{ad(H(x)omega)}(1(x)E-)";
    return "Delta(" + g + ") = (1/xi)((e^omega(x)e^omega) e^{ad(H(x)omega)}(e^{-hH}(x)e^{-hH}) - 1(x)1)";
}

inline std::string check_name(const std::string& g) {
    if (g == "exp_sigma") return "e^sigma";
    if (g == "exp_omega") return "e^omega";
    return g;
}

}  // namespace detail

// One report line per printed coproduct line.  A printed line that fails while
// its derived form passes is reported as documented-misprint.
inline Check compare_closed_form(ClosedTarget t, const std::string& g, int N) {
    Check c;
    c.check_id = std::string(closed_target_name(t)) + "/delta-" + detail::check_name(g);
    c.paper_anchor = detail::printed_text(t, g);
    Element printed = closed_form_residual(t, g, N, false);
    if (printed.is_zero()) {
        c.status = "pass";
        c.residual = "0";
        return c;
    }
    c.residual = residual_of(printed);
    c.printed_form = detail::printed_text(t, g);
    const bool has_derived = t != ClosedTarget::QjtBor && (g == "E" || g == "E+" || g == "E-");
    if (!has_derived) {
        c.status = "fail";
        return c;
    }
    c.derived_form = detail::derived_text(g);
    const bool derived_ok = closed_form_residual(t, g, N, true).is_zero();
    c.status = derived_ok ? "documented-misprint" : "fail";
    if (!derived_ok) c.derived_form += " [derived form also fails]";
    return c;
}

// [H, e^omega] = e^omega - e^{hH}
inline Check check_h_exp_omega(ClosedTarget t, int N) {
    const Presentation pres = closed_target_presentation(t);
    SigmaOmega so = build_sigma_omega(pres, N);
    Element H = generator(pres, "H", N);
    Element diff = (H * so.exp_omega - so.exp_omega * H) - (so.exp_omega - cartan_exp(pres, N, 1));
    Check c{std::string(closed_target_name(t)) + "/relation-H-e^omega", "[H,e^omega] = e^omega - e^{hH}",
            diff.is_zero() ? "pass" : "fail", residual_of(diff), "", ""};
    return c;
}

// [E-, e^omega]_{e^h} = E- e^omega - e^h e^omega E-  against  xi (1 - e^{2hH})/(1 - e^{-h})
inline Element q_bracket_lhs(int N) {
    SigmaOmega so = build_sigma_omega(Presentation::Sl2, N);
    Element Em = generator(Presentation::Sl2, "E-", N);
    TruncSeries eh = series_exp(TruncSeries::h(N));
    return Em * so.exp_omega - so.exp_omega * Em * eh;
}

inline Element q_bracket_rhs(int N) {
    const int M = N + 1;
    Element num = Element::one(Presentation::Sl2, 1, M) - cartan_exp(Presentation::Sl2, M, 2);
    TruncSeries den = TruncSeries::constant(1, M) - series_exp(-TruncSeries::h(M));
    Element r(Presentation::Sl2, 1, N);
    for (const auto& [m, s] : num.terms()) r.add_term(m, series_div_val(s, den));
    return r * TruncSeries::xi(N);
}

inline VerificationReport verify_closed_forms(int N) {
    VerificationReport rep;
    for (ClosedTarget t : {ClosedTarget::QjtBor, ClosedTarget::QjBor, ClosedTarget::QjsiBor, ClosedTarget::QjSl2,
                           ClosedTarget::QjsiSl})
        for (const char* g : {"H", "E", "E+", "E-", "exp_sigma", "exp_omega"})
            if (closed_form_has(t, g)) rep.add(compare_closed_form(t, g, N));

    rep.add(check_h_exp_omega(ClosedTarget::QjsiBor, N));
    rep.add(check_h_exp_omega(ClosedTarget::QjsiSl, N));
    {
        Element H = generator(Presentation::Sl2, "H", N), Em = generator(Presentation::Sl2, "E-", N);
        Element d = (H * Em - Em * H) + Em;
        rep.add("qjsi-sl/relation-H-E-", "[H,E-] = -E-", d.is_zero(), residual_of(d));
    }
    {
        Element d = q_bracket_lhs(N) - q_bracket_rhs(N);
        rep.add("qjsi-sl/relation-E--e^omega", "[E-,e^omega]_{e^h} = xi", d.is_zero(), residual_of(d));
    }
    {
        // printed [E+,E-] = (e^{hH} - e^{hH})/(1 - e^h) vanishes identically
        Element Ep = generator(Presentation::Sl2, "E+", N), Em = generator(Presentation::Sl2, "E-", N);
        Element comm = Ep * Em - Em * Ep;
        const int M = N + 1;
        Element num = cartan_exp(Presentation::Sl2, M, 1) - cartan_exp(Presentation::Sl2, M, -1);
        TruncSeries den = TruncSeries::constant(1, M) - series_exp(-TruncSeries::h(M));
        Element derived(Presentation::Sl2, 1, N);
        for (const auto& [m, s] : num.terms()) derived.add_term(m, series_div_val(s, den));
        Check c{"q-sl2/commutator", "[E+,E-] = (e^{hH} - e^{hH})/(1 - e^h)", "", residual_of(comm), "", ""};
        c.printed_form = "[E+,E-] = (e^{hH} - e^{hH})/(1 - e^h)";
        c.derived_form = "[E+,E-] = (e^{hH} - e^{-hH})/(1 - e^{-h})";
        if (comm.is_zero()) {
            c.status = "pass";
        } else {
            c.status = (comm - derived).is_zero() ? "documented-misprint" : "fail";
        }
        rep.add(c);
    }
    return rep;
}

}  // namespace twistkit
