#pragma once

// Coproduct, counit and antipode on PBW elements, driven by generator images.

#include "twistkit/pbw/algebra.hpp"
#include "twistkit/report.hpp"

#include <random>

namespace twistkit {

// Images of the generators.  `lower` is unused for Borel.
struct GeneratorImages {
    Element h, raise, lower;
};

inline Element cartan_exp(Presentation pres, int order, const Rational& c) {
    // e^{c h H}
    return element_exp(generator(pres, "H", order) * (TruncSeries::h(order) * c));
}

inline GeneratorImages standard_coproduct_images(Presentation pres, int N) {
    Element H = generator(pres, "H", N);
    Element one = Element::one(pres, 1, N);
    Element K = cartan_exp(pres, N, 1);
    Element E = raising(pres, N);
    GeneratorImages g{tensor(H, one) + tensor(one, H), tensor(E, one) + tensor(K, E), Element(pres, 2, N)};
    if (pres == Presentation::Sl2) {
        Element F = generator(pres, "E-", N);
        g.lower = tensor(F, cartan_exp(pres, N, -1)) + tensor(one, F);
    }
    return g;
}

inline GeneratorImages standard_antipode_images(Presentation pres, int N) {
    Element H = generator(pres, "H", N);
    GeneratorImages g{-H, -(cartan_exp(pres, N, -1) * raising(pres, N)), Element(pres, 1, N)};
    if (pres == Presentation::Sl2) g.lower = -(generator(pres, "E-", N) * cartan_exp(pres, N, 1));
    return g;
}

// Algebra morphism (or anti-morphism) determined by generator images.
class WordMap {
public:
    WordMap(Presentation pres, int order, GeneratorImages images, bool anti)
        : pres_(pres), order_(order), img_(std::move(images)), anti_(anti) {}

    const GeneratorImages& images() const { return img_; }

    const Element& on_word(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        const int deg = img_.h.degree();
        Element r = Element::one(pres_, deg, order_);
        // PBW order of factors: lower^a H^b raise^c (Borel: raise^a H^b)
        std::vector<std::pair<const Element*, int>> factors;
        if (pres_ == Presentation::Borel) {
            factors = {{&img_.raise, w.a}, {&img_.h, w.b}};
        } else {
            factors = {{&img_.lower, w.a}, {&img_.h, w.b}, {&img_.raise, w.c}};
        }
        if (anti_) std::reverse(factors.begin(), factors.end());
        for (const auto& [g, e] : factors)
            for (int k = 0; k < e; ++k) r = r * *g;
        return memo_.emplace(w, std::move(r)).first->second;
    }

    Element apply(const Element& x, int slot = 0) {
        return map_slot(x, slot, [this](const Word& w) { return on_word(w); });
    }

private:
    Presentation pres_;
    int order_;
    GeneratorImages img_;
    bool anti_;
    std::map<Word, Element> memo_;
};

inline Element counit_word(Presentation pres, const Word& w, int order) {
    return w.empty() ? Element::one(pres, 0, order) : Element::zero(pres, 0, order);
}

inline TruncSeries counit(const Element& x) {
    if (x.degree() != 1) throw std::invalid_argument("counit expects tensor degree 1");
    Mono unit;
    return x.coeff(unit);
}

inline Element counit_slot(const Element& x, int slot) {
    return map_slot(x, slot, [&](const Word& w) { return counit_word(x.presentation(), w, x.order()); });
}

// A coproduct + antipode pair, e.g. standard or twisted.
struct HopfMaps {
    Presentation pres;
    int order;
    WordMap delta;
    WordMap antipode;

    HopfMaps(Presentation p, int n, GeneratorImages d, GeneratorImages s)
        : pres(p), order(n), delta(p, n, std::move(d), false), antipode(p, n, std::move(s), true) {}

    static HopfMaps standard(Presentation p, int n) {
        return HopfMaps(p, n, standard_coproduct_images(p, n), standard_antipode_images(p, n));
    }

    // undeformed structure: every generator primitive
    static HopfMaps classical(Presentation p, int n) {
        Element one = Element::one(p, 1, n);
        auto prim = [&](const Element& x) { return tensor(x, one) + tensor(one, x); };
        GeneratorImages d{prim(generator(p, "H", n)), prim(raising(p, n)), Element(p, 2, n)};
        GeneratorImages s{-generator(p, "H", n), -raising(p, n), Element(p, 1, n)};
        if (p == Presentation::Sl2) {
            d.lower = prim(generator(p, "E-", n));
            s.lower = -generator(p, "E-", n);
        }
        return HopfMaps(p, n, std::move(d), std::move(s));
    }
};

inline Element coproduct_std(const Element& x) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<HopfMaps>> cache;
    auto key = std::make_pair(static_cast<int>(x.presentation()), x.order());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<HopfMaps>(HopfMaps::standard(x.presentation(), x.order()))).first;
    return it->second->delta.apply(x);
}

inline Element antipode_std(const Element& x) {
    HopfMaps m = HopfMaps::standard(x.presentation(), x.order());
    return m.antipode.apply(x);
}

inline std::string residual_of(const Element& diff) {
    if (diff.is_zero()) return "0";
    auto [dh, dx] = diff.lowest_multidegree();
    return "nonzero at multidegree (" + std::to_string(dh) + "," + std::to_string(dx) + ")";
}

inline std::vector<std::string> generator_names(Presentation pres) {
    if (pres == Presentation::Borel) return {"H", "E"};
    return {"H", "E+", "E-"};
}

// Raw generator strings of length 1..3, fixed seed.
inline std::vector<std::string> random_raw_words(Presentation pres, int count, unsigned seed) {
    std::mt19937 rng(seed);
    auto names = generator_names(pres);
    std::uniform_int_distribution<int> len(1, 3), pick(0, static_cast<int>(names.size()) - 1);
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        int n = len(rng);
        std::string s;
        for (int k = 0; k < n; ++k) s += (k ? " " : "") + names[pick(rng)];
        out.push_back(s);
    }
    return out;
}

// Coassociativity, counit, both antipode axioms and multiplicativity of the
// coproduct on generators and random words.
inline VerificationReport verify_hopf_axioms(HopfMaps& maps, const std::string& prefix, unsigned seed = 20240611) {
    VerificationReport rep;
    const Presentation pres = maps.pres;
    const int N = maps.order;
    std::vector<std::string> words = generator_names(pres);
    for (const auto& w : random_raw_words(pres, 10, seed)) words.push_back(w);

    std::string coassoc, cou, anti_l, anti_r, morph;
    bool ok_coassoc = true, ok_cou = true, ok_al = true, ok_ar = true, ok_morph = true;
    auto note = [](std::string& acc, bool& ok, const std::string& w, const Element& diff) {
        if (diff.is_zero()) return;
        if (ok) acc = "[" + w + "] " + residual_of(diff);
        ok = false;
    };
    for (const auto& raw : words) {
        Element x = normal_order(raw, pres, N);
        // Delta of a raw word is the product of the generator images in raw order
        Element d = Element::one(pres, 2, N);
        std::istringstream tokens(raw);
        for (std::string g; tokens >> g;) d = d * maps.delta.apply(generator(pres, g, N));
        note(coassoc, ok_coassoc, raw, maps.delta.apply(d, 0) - maps.delta.apply(d, 1));
        note(cou, ok_cou, raw, counit_slot(d, 0) - x);
        note(cou, ok_cou, raw, counit_slot(d, 1) - x);
        Element eps = Element::scalar(pres, 1, counit(x));
        note(anti_l, ok_al, raw, multiply_slots(maps.antipode.apply(d, 0)) - eps);
        note(anti_r, ok_ar, raw, multiply_slots(maps.antipode.apply(d, 1)) - eps);
    }
    // Delta(xy) = Delta(x) Delta(y), with xy normal-ordered first
    auto names = generator_names(pres);
    for (const auto& a : names)
        for (const auto& b : names) {
            Element x = generator(pres, a, N), y = generator(pres, b, N);
            note(morph, ok_morph, a + " " + b, maps.delta.apply(x * y) - maps.delta.apply(x) * maps.delta.apply(y));
        }
    rep.add(prefix + "/antipode-left", "m(S(x)id)Delta = eps", ok_al, ok_al ? "0" : anti_l);
    rep.add(prefix + "/antipode-right", "m(id(x)S)Delta = eps", ok_ar, ok_ar ? "0" : anti_r);
    rep.add(prefix + "/coassociativity", "(Delta(x)id)Delta = (id(x)Delta)Delta", ok_coassoc, ok_coassoc ? "0" : coassoc);
    rep.add(prefix + "/counit", "(eps(x)id)Delta = id = (id(x)eps)Delta", ok_cou, ok_cou ? "0" : cou);
    rep.add(prefix + "/morphism", "Delta(xy) = Delta(x)Delta(y)", ok_morph, ok_morph ? "0" : morph);
    return rep;
}

inline VerificationReport verify_hopf_axioms(Presentation pres, int N) {
    HopfMaps maps = HopfMaps::standard(pres, N);
    return verify_hopf_axioms(maps, std::string("hopf/") + presentation_name(pres));
}

}  // namespace twistkit
