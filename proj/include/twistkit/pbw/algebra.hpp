#pragma once

// PBW-ordered elements of U_h(B) and U_h(sl2), and their tensor squares/cubes,
// with TruncSeries coefficients.

#include "twistkit/coeff/series.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistkit {

enum class Presentation { Borel, Sl2 };

inline const char* presentation_name(Presentation p) { return p == Presentation::Borel ? "Borel" : "sl2"; }

// Borel: E^a H^b (c unused).  sl2: E-^a H^b E+^c.
struct Word {
    std::uint8_t a = 0, b = 0, c = 0;
    bool empty() const { return a == 0 && b == 0 && c == 0; }
    auto operator<=>(const Word&) const = default;
};

struct Mono {
    std::array<Word, 3> w{};
    auto operator<=>(const Mono&) const = default;
};

inline std::uint8_t narrow_exp(int e) {
    if (e < 0 || e > 255) throw std::overflow_error("PBW exponent out of range");
    return static_cast<std::uint8_t>(e);
}

inline std::string word_to_string(Presentation pres, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    auto put = [&](const char* g, int e) {
        if (e == 0) return;
        if (!out.empty()) out += " ";
        out += g;
        if (e > 1) out += "^" + std::to_string(e);
    };
    if (pres == Presentation::Borel) {
        put("E", w.a);
        put("H", w.b);
    } else {
        put("E-", w.a);
        put("H", w.b);
        put("E+", w.c);
    }
    return out;
}

class Element;

namespace detail {

// Polynomial in H with series coefficients; index = power.
using HPoly = std::vector<TruncSeries>;

inline void hpoly_trim(HPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline HPoly hpoly_mul(const HPoly& f, const HPoly& g, int N) {
    if (f.empty() || g.empty()) return {};
    HPoly r(f.size() + g.size() - 1, TruncSeries(N));
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        for (size_t j = 0; j < g.size(); ++j)
            if (!g[j].is_zero()) r[i + j] += f[i] * g[j];
    }
    hpoly_trim(r);
    return r;
}

// f(H) -> f(H + s)
inline HPoly hpoly_shift(const HPoly& f, int s, int N) {
    if (s == 0) return f;
    HPoly r(f.size(), TruncSeries(N));
    for (size_t k = 0; k < f.size(); ++k) {
        if (f[k].is_zero()) continue;
        for (size_t j = 0; j <= k; ++j)
            r[j] += f[k] * (binomial(static_cast<int>(k), static_cast<int>(j)) * rpow(Rational(s), static_cast<int>(k - j)));
    }
    hpoly_trim(r);
    return r;
}

// (H + s)^n
inline HPoly hpoly_linear_power(int s, int n, int N) {
    HPoly r(n + 1, TruncSeries(N));
    for (int j = 0; j <= n; ++j) r[j] = TruncSeries::constant(binomial(n, j) * rpow(Rational(s), n - j), N);
    hpoly_trim(r);
    return r;
}

inline void hpoly_add(HPoly& f, const HPoly& g) {
    if (f.size() < g.size()) f.resize(g.size(), TruncSeries(g.empty() ? 0 : g[0].order()));
    for (size_t k = 0; k < g.size(); ++k) f[k] += g[k];
    hpoly_trim(f);
}

using WordTerms = std::vector<std::pair<Word, TruncSeries>>;

// Per (presentation, order) tables.  Thread-local so concurrent evaluation
// never shares mutable state.
struct Tables {
    Presentation pres;
    int N;
    HPoly commutator;  // [E+,E-] as a polynomial in H
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, HPoly>> exchange;  // E+^c E-^d
    std::map<std::pair<Word, Word>, WordTerms> products;

    Tables(Presentation p, int n) : pres(p), N(n) {
        if (pres == Presentation::Sl2) build_commutator();
    }

    // (e^{hH} - e^{-hH}) / (1 - e^{-h}) = sum over odd m of 2 h^m H^m / m! / (1 - e^{-h})
    void build_commutator() {
        const int M = N + 1;
        TruncSeries denom = TruncSeries::constant(1, M) - series_exp(-TruncSeries::h(M));
        commutator.assign(M + 1, TruncSeries(N));
        for (int m = 1; m <= M; m += 2) {
            TruncSeries num = TruncSeries::monomial(m, 0, 2 / factorial(m), M);
            commutator[m] = series_div_val(num, denom);
        }
        hpoly_trim(commutator);
    }

    // sum_{m<i} C(H - m)
    HPoly commutator_sum(int i) {
        HPoly s;
        for (int m = 0; m < i; ++m) hpoly_add(s, hpoly_shift(commutator, -m, N));
        return s;
    }

    // E+^c E-^d = sum E-^i g(H) E+^j, keyed by (i, j)
    const std::map<std::pair<int, int>, HPoly>& exchange_table(int c, int d) {
        auto key = std::make_pair(c, d);
        auto it = exchange.find(key);
        if (it != exchange.end()) return it->second;
        std::map<std::pair<int, int>, HPoly> out;
        if (c == 0) {
            out[{d, 0}] = HPoly{TruncSeries::constant(1, N)};
        } else {
            const auto& prev = exchange_table(c - 1, d);
            for (const auto& [ij, g] : prev) {
                auto [i, j] = ij;
                // E+ E-^i g(H) E+^j = E-^i g(H-1) E+^{j+1} + E-^{i-1} S_i(H) g(H) E+^j
                hpoly_add(out[{i, j + 1}], hpoly_shift(g, -1, N));
                if (i > 0) hpoly_add(out[{i - 1, j}], hpoly_mul(commutator_sum(i), g, N));
            }
            for (auto jt = out.begin(); jt != out.end();) jt = jt->second.empty() ? out.erase(jt) : std::next(jt);
        }
        return exchange.emplace(key, std::move(out)).first->second;
    }

    const WordTerms& product(const Word& x, const Word& y) {
        auto key = std::make_pair(x, y);
        auto it = products.find(key);
        if (it != products.end()) return it->second;
        WordTerms out;
        if (pres == Presentation::Borel) {
            // E^a H^b E^c H^d = E^{a+c} (H+c)^b H^d
            for (int k = 0; k <= x.b; ++k) {
                Rational coef = binomial(x.b, k) * rpow(Rational(y.a), x.b - k);
                if (coef == 0) continue;
                out.push_back({Word{narrow_exp(x.a + y.a), narrow_exp(k + y.b), 0}, TruncSeries::constant(coef, N)});
            }
        } else {
            const auto& table = exchange_table(x.c, y.a);
            std::map<Word, TruncSeries> acc;
            for (const auto& [ij, g] : table) {
                auto [i, j] = ij;
                HPoly f = hpoly_linear_power(-i, x.b, N);
                f = hpoly_mul(f, g, N);
                f = hpoly_mul(f, hpoly_linear_power(-j, y.b, N), N);
                for (size_t k = 0; k < f.size(); ++k) {
                    if (f[k].is_zero()) continue;
                    Word w{narrow_exp(x.a + i), narrow_exp(static_cast<int>(k)), narrow_exp(j + y.c)};
                    auto [pos, fresh] = acc.emplace(w, f[k]);
                    if (!fresh) pos->second += f[k];
                }
            }
            for (auto& [w, s] : acc)
                if (!s.is_zero()) out.push_back({w, std::move(s)});
        }
        return products.emplace(key, std::move(out)).first->second;
    }
};

inline Tables& tables(Presentation pres, int N) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<Tables>> cache;
    auto key = std::make_pair(static_cast<int>(pres), N);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<Tables>(pres, N)).first;
    return *it->second;
}

}  // namespace detail

class Element {
public:
    using Terms = std::map<Mono, TruncSeries>;

    Element(Presentation pres, int degree, int order) : pres_(pres), degree_(degree), order_(order) {
        if (degree < 0 || degree > 3) throw std::invalid_argument("tensor degree must be 0..3");
    }

    static Element zero(Presentation pres, int degree, int order) { return Element(pres, degree, order); }
    static Element scalar(Presentation pres, int degree, const TruncSeries& s) {
        Element e(pres, degree, s.order());
        e.add_term(Mono{}, s);
        return e;
    }
    static Element one(Presentation pres, int degree, int order) {
        return scalar(pres, degree, TruncSeries::constant(1, order));
    }
    static Element word(Presentation pres, const Word& w, int order, const TruncSeries* coeff = nullptr) {
        Element e(pres, 1, order);
        Mono m;
        m.w[0] = w;
        e.add_term(m, coeff ? *coeff : TruncSeries::constant(1, order));
        return e;
    }

    Presentation presentation() const { return pres_; }
    int degree() const { return degree_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Lowest total (h, xi)-degree among all coefficients.
    int valuation() const {
        int v = order_ + 1;
        for (const auto& [m, s] : terms_) v = std::min(v, s.valuation());
        return v;
    }

    // (dh, dx) of some lowest-degree nonzero coefficient, or (-1,-1) for zero.
    std::pair<int, int> lowest_multidegree() const {
        std::pair<int, int> best{-1, -1};
        int bv = order_ + 1;
        for (const auto& [m, s] : terms_)
            for (const auto& t : s.terms()) {
                int d = t.dh + t.dx;
                if (d < bv || (d == bv && std::make_pair(t.dh, t.dx) > best)) {
                    bv = d;
                    best = {t.dh, t.dx};
                }
            }
        return best;
    }

    TruncSeries coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? TruncSeries(order_) : it->second;
    }
    TruncSeries scalar_part() const { return coeff(Mono{}); }

    void add_term(const Mono& m, const TruncSeries& s) {
        if (s.order() != order_) throw std::invalid_argument("mismatched truncation orders");
        if (s.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element operator-() const {
        Element r = *this;
        for (auto& [m, s] : r.terms_) s = -s;
        return r;
    }
    Element& operator+=(const Element& o) {
        check(o);
        for (const auto& [m, s] : o.terms_) add_term(m, s);
        return *this;
    }
    Element& operator-=(const Element& o) {
        check(o);
        for (const auto& [m, s] : o.terms_) add_term(m, -s);
        return *this;
    }
    Element& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, s] : terms_) s *= c;
        }
        return *this;
    }
    Element& operator*=(const TruncSeries& c) {
        Terms out;
        for (auto& [m, s] : terms_) {
            TruncSeries t = s * c;
            if (!t.is_zero()) out.emplace(m, std::move(t));
        }
        terms_ = std::move(out);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    friend Element operator*(Element a, const TruncSeries& c) { return a *= c; }
    friend Element operator*(const TruncSeries& c, Element a) { return a *= c; }

    friend Element operator*(const Element& a, const Element& b) {
        a.check(b);
        const int N = a.order_;
        auto& tab = detail::tables(a.pres_, N);
        Element r(a.pres_, a.degree_, N);
        for (const auto& [ma, sa] : a.terms_) {
            const int va = sa.valuation();
            for (const auto& [mb, sb] : b.terms_) {
                if (va + sb.valuation() > N) continue;
                TruncSeries base = sa * sb;
                if (base.is_zero()) continue;
                if (a.degree_ == 0) {
                    r.add_term(Mono{}, base);
                    continue;
                }
                // slotwise products, then expand the cartesian product
                std::array<const detail::WordTerms*, 3> parts{};
                for (int k = 0; k < a.degree_; ++k) parts[k] = &tab.product(ma.w[k], mb.w[k]);
                r.expand_into(parts, a.degree_, 0, Mono{}, base);
            }
        }
        return r;
    }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.pres_ != b.pres_ || a.degree_ != b.degree_ || a.order_ != b.order_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [m, s] : a.terms_) {
            if (!(m == it->first) || s != it->second) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element pow(int e) const {
        Element r = one(pres_, degree_, order_);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    // Coefficient-wise transformation (e.g. set xi = 0); f must keep the order.
    Element map_coeffs(const std::function<TruncSeries(const TruncSeries&)>& f) const {
        Element r(pres_, degree_, order_);
        for (const auto& [m, s] : terms_) r.add_term(m, f(s));
        return r;
    }
    Element with_order(int n) const {
        Element r(pres_, degree_, n);
        for (const auto& [m, s] : terms_) r.add_term(m, s.with_order(n));
        return r;
    }

    // Canonical text: one term per line, monomials in sorted order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, s] : terms_) {
            if (!first) os << "\n";
            first = false;
            os << "(" << s.to_string() << ") ";
            for (int k = 0; k < degree_; ++k) {
                if (k) os << " (x) ";
                os << word_to_string(pres_, m.w[k]);
            }
            if (degree_ == 0) os << "1";
        }
        return os.str();
    }

private:
    void expand_into(const std::array<const detail::WordTerms*, 3>& parts, int deg, int k, Mono m,
                     const TruncSeries& c) {
        if (k == deg) {
            add_term(m, c);
            return;
        }
        for (const auto& [w, s] : *parts[k]) {
            if (c.valuation() + s.valuation() > order_) continue;
            m.w[k] = w;
            if (s.is_constant()) {
                expand_into(parts, deg, k + 1, m, c * s.constant_term());
            } else {
                expand_into(parts, deg, k + 1, m, c * s);
            }
        }
    }
    void check(const Element& o) const {
        if (pres_ != o.pres_) throw std::invalid_argument("presentation mismatch");
        if (degree_ != o.degree_) throw std::invalid_argument("tensor degree mismatch");
        if (order_ != o.order_) throw std::invalid_argument("mismatched truncation orders");
    }

    Presentation pres_;
    int degree_;
    int order_;
    Terms terms_;
};

// ---- generators and parsing ----------------------------------------------

inline Element generator(Presentation pres, const std::string& name, int order) {
    if (name == "H") return Element::word(pres, Word{0, 1, 0}, order);
    if (pres == Presentation::Borel) {
        if (name == "E") return Element::word(pres, Word{1, 0, 0}, order);
    } else {
        if (name == "E+") return Element::word(pres, Word{0, 0, 1}, order);
        if (name == "E-") return Element::word(pres, Word{1, 0, 0}, order);
    }
    throw std::invalid_argument(std::string("unknown generator '") + name + "' for " + presentation_name(pres));
}

// The raising generator: E for Borel, E+ for sl2.
inline Element raising(Presentation pres, int order) {
    return generator(pres, pres == Presentation::Borel ? "E" : "E+", order);
}

// Raw product of generators separated by spaces or '*', e.g. "E+ E-" or "H*E".
inline Element normal_order(const std::string& raw, Presentation pres, int order) {
    Element r = Element::one(pres, 1, order);
    std::string tok;
    auto flush = [&] {
        if (tok.empty() || tok == "1") {
            tok.clear();
            return;
        }
        r = r * generator(pres, tok, order);
        tok.clear();
    };
    for (char ch : raw) {
        if (ch == ' ' || ch == '*') {
            flush();
        } else {
            tok += ch;
        }
    }
    flush();
    return r;
}

// ---- exponentials ---------------------------------------------------------

inline Element element_exp(const Element& x) {
    if (x.valuation() < 1) throw std::domain_error("element_exp: argument must have valuation >= 1");
    const int N = x.order();
    Element sum = Element::one(x.presentation(), x.degree(), N), term = sum;
    for (int k = 1; k <= N; ++k) {
        term = term * x * Rational(1, k);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

// log(a) for a = 1 + x, valuation(x) >= 1.
inline Element element_log(const Element& a) {
    const int N = a.order();
    Element x = a - Element::one(a.presentation(), a.degree(), N);
    if (x.valuation() < 1) throw std::domain_error("element_log: argument must be 1 + O(1)");
    Element sum(a.presentation(), a.degree(), N), pw = Element::one(a.presentation(), a.degree(), N);
    for (int k = 1; k <= N; ++k) {
        pw = pw * x;
        if (pw.is_zero()) break;
        sum += pw * Rational(k % 2 ? 1 : -1, k);
    }
    return sum;
}

// Inverse of c*1 + y with c a nonzero rational and valuation(y) >= 1.
inline Element element_inverse(const Element& a) {
    const int N = a.order();
    Rational c = a.scalar_part().constant_term();
    if (c == 0) throw std::domain_error("element_inverse: constant term is not invertible");
    Element one = Element::one(a.presentation(), a.degree(), N);
    Element y = a * (1 / c) - one;
    if (y.valuation() < 1) throw std::domain_error("element_inverse: constant term must be a scalar");
    Element sum = one, pw = one;
    for (int k = 1; k <= N; ++k) {
        pw = pw * (-y);
        if (pw.is_zero()) break;
        sum += pw;
    }
    return sum * (1 / c);
}

// ---- tensor plumbing ------------------------------------------------------

// Place x (degree d) into a degree-`target` element, slot k of x going to slots[k].
inline Element place(const Element& x, int target, const std::vector<int>& slots) {
    if (static_cast<int>(slots.size()) != x.degree()) throw std::invalid_argument("place: slot list size");
    Element r(x.presentation(), target, x.order());
    for (const auto& [m, s] : x.terms()) {
        Mono out;
        for (size_t k = 0; k < slots.size(); ++k) out.w[slots[k]] = m.w[k];
        r.add_term(out, s);
    }
    return r;
}

inline Element flip(const Element& x) {
    if (x.degree() != 2) throw std::invalid_argument("flip needs tensor degree 2");
    return place(x, 2, {1, 0});
}

inline Element tensor(const Element& a, const Element& b) {
    if (a.presentation() != b.presentation() || a.order() != b.order())
        throw std::invalid_argument("tensor: incompatible operands");
    const int deg = a.degree() + b.degree();
    if (deg > 3) throw std::invalid_argument("tensor degree above 3");
    Element r(a.presentation(), deg, a.order());
    for (const auto& [ma, sa] : a.terms())
        for (const auto& [mb, sb] : b.terms()) {
            if (sa.valuation() + sb.valuation() > a.order()) continue;
            Mono m;
            for (int k = 0; k < a.degree(); ++k) m.w[k] = ma.w[k];
            for (int k = 0; k < b.degree(); ++k) m.w[a.degree() + k] = mb.w[k];
            r.add_term(m, sa * sb);
        }
    return r;
}

// Apply a linear map word -> element (of degree k) in one slot.
inline Element map_slot(const Element& x, int slot, const std::function<Element(const Word&)>& f) {
    if (slot < 0 || slot >= x.degree()) throw std::invalid_argument("map_slot: bad slot");
    std::map<Word, Element> memo;
    std::unique_ptr<Element> r;
    for (const auto& [m, s] : x.terms()) {
        auto it = memo.find(m.w[slot]);
        if (it == memo.end()) it = memo.emplace(m.w[slot], f(m.w[slot])).first;
        const Element& img = it->second;
        const int k = img.degree();
        if (!r) r = std::make_unique<Element>(x.presentation(), x.degree() - 1 + k, x.order());
        for (const auto& [mi, si] : img.terms()) {
            if (s.valuation() + si.valuation() > x.order()) continue;
            Mono out;
            int pos = 0;
            for (int j = 0; j < slot; ++j) out.w[pos++] = m.w[j];
            for (int j = 0; j < k; ++j) out.w[pos++] = mi.w[j];
            for (int j = slot + 1; j < x.degree(); ++j) out.w[pos++] = m.w[j];
            r->add_term(out, s * si);
        }
    }
    if (!r) {
        // zero input: degree follows from the image of the unit word
        Element img = f(Word{});
        return Element(x.presentation(), x.degree() - 1 + img.degree(), x.order());
    }
    return *r;
}

// Multiplication map A (x) A -> A.
inline Element multiply_slots(const Element& x) {
    if (x.degree() != 2) throw std::invalid_argument("multiply_slots needs tensor degree 2");
    auto& tab = detail::tables(x.presentation(), x.order());
    Element r(x.presentation(), 1, x.order());
    for (const auto& [m, s] : x.terms())
        for (const auto& [w, c] : tab.product(m.w[0], m.w[1])) {
            Mono out;
            out.w[0] = w;
            r.add_term(out, s * c);
        }
    return r;
}

}  // namespace twistkit
