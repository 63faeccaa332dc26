#pragma once

// Suite configuration and dispatch for the twistkit command line.

#include "twistkit/affine/affine.hpp"
#include "twistkit/limits.hpp"
#include "twistkit/twist/closed_forms.hpp"

#include <optional>
#include <stdexcept>

namespace twistkit {

// Raised for invalid names or singular parameter points (exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteConfig {
    std::string suite;
    int order = 4;
    std::optional<Rational> q, xi;
    std::vector<Rational> zeta;  // empty: 0, 1, 2, -1
    std::vector<Rational> z;     // qybe: z1 z2 z3; affine: one value
    int nmax = 6;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hopf", "twist-axioms", "closed-forms", "rmatrix",
                                                "qybe", "affine",       "limits"};
    return names;
}

inline Rational require_root(const Rational& q) {
    Rational p;
    if (q <= 0 || !rational_sqrt(q, p)) throw ConfigError("q = " + to_string(q) + " is not the square of a rational");
    return p;
}

inline VerificationReport run_suite(const SuiteConfig& cfg) {
    if (cfg.order < 1) throw ConfigError("--order must be at least 1");
    const int N = cfg.order;
    VerificationReport rep;
    std::vector<std::pair<std::string, std::string>> echo{{"order", std::to_string(N)}};
    const std::string& s = cfg.suite;

    if (s == "hopf") {
        rep.merge(verify_hopf_axioms(Presentation::Borel, N));
        rep.merge(verify_hopf_axioms(Presentation::Sl2, N));
        rep.merge(verify_twisted_hopf(N));
    } else if (s == "twist-axioms") {
        rep = verify_twist_axioms(N);
    } else if (s == "closed-forms") {
        rep = verify_closed_forms(N);
    } else if (s == "rmatrix") {
        std::vector<Rational> zetas = cfg.zeta.empty() ? std::vector<Rational>{0, 1, 2, -1} : cfg.zeta;
        rep = verify_rmatrix(N, zetas);
        std::string zs;
        for (const auto& x : zetas) zs += (zs.empty() ? "" : " ") + to_string(x);
        echo.emplace_back("zeta", zs);
    } else if (s == "qybe") {
        auto grid = default_qybe_grid();
        if (cfg.q || cfg.xi) grid = {{cfg.q.value_or(2), cfg.xi.value_or(1)}};
        std::array<Rational, 3> zs{Rational(1, 2), Rational(1, 3), Rational(1, 5)};
        if (!cfg.z.empty()) {
            if (cfg.z.size() != 3) throw ConfigError("qybe takes exactly three --z values");
            zs = {cfg.z[0], cfg.z[1], cfg.z[2]};
        }
        for (int i = 0; i < 3; ++i) {
            if (zs[i] == 0) throw ConfigError("spectral values must be nonzero");
            for (int j = i + 1; j < 3; ++j)
                if (zs[i] == zs[j]) throw ConfigError("spectral ratio 1 is a pole of the hybrid matrix");
        }
        for (const auto& [q, x] : grid)
            if (q == 0 || q == -1) throw ConfigError("q = " + to_string(q) + " is a singular point");
        rep = verify_qybe(grid, zs);
        rep.merge(verify_rep(N));
        std::string g;
        for (const auto& [q, x] : grid) g += (g.empty() ? "" : " ") + ("(" + to_string(q) + "," + to_string(x) + ")");
        echo.emplace_back("q_xi", g);
        echo.emplace_back("z", to_string(zs[0]) + " " + to_string(zs[1]) + " " + to_string(zs[2]));
    } else if (s == "affine") {
        AffineConfig ac;
        if (cfg.q) ac.p = require_root(*cfg.q);
        if (cfg.xi) ac.xi = *cfg.xi;
        if (cfg.z.size() > 1) throw ConfigError("affine takes a single --z value");
        if (!cfg.z.empty()) ac.z = cfg.z[0];
        if (ac.z == 0) throw ConfigError("z must be nonzero");
        if (cfg.nmax < 1) throw ConfigError("--nmax must be at least 1");
        ac.n_max_list.clear();
        for (int n = 2; n < cfg.nmax; n += 2) ac.n_max_list.push_back(n);
        ac.n_max_list.push_back(cfg.nmax);
        rep = verify_affine(ac);
        echo.emplace_back("q", to_string(ac.p * ac.p));
        echo.emplace_back("xi", to_string(ac.xi));
        echo.emplace_back("z", to_string(ac.z));
        echo.emplace_back("nmax", std::to_string(cfg.nmax));
    } else if (s == "limits") {
        rep = verify_limits(N);
    } else {
        throw ConfigError("unknown suite '" + s + "'");
    }
    rep.suite = s;
    rep.config = echo;
    rep.sort();
    return rep;
}

}  // namespace twistkit
