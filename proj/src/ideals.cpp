#include "cusp/ideals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cusp {

namespace {
unsigned degree(const Expo& e) {
    unsigned d = 0;
    for (auto v : e) d += v;
    return d;
}

bool divides(const Expo& a, const Expo& b) {
    for (int i = 0; i < kIdealVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo quotient(const Expo& a, const Expo& b) {
    Expo out{};
    for (int i = 0; i < kIdealVars; ++i)
        out[i] = static_cast<uint16_t>(a[i] - b[i]);
    return out;
}

Expo lcm_expo(const Expo& a, const Expo& b) {
    Expo out{};
    for (int i = 0; i < kIdealVars; ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

Expo sum_expo(const Expo& a, const Expo& b) {
    Expo out{};
    for (int i = 0; i < kIdealVars; ++i)
        out[i] = static_cast<uint16_t>(a[i] + b[i]);
    return out;
}

const std::pair<const Expo, Rational>& leading(const Poly& f) {
    return *f.rbegin();
}

void add_term(Poly& f, const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = f.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) f.erase(it);
    }
}
}  // namespace

bool GrevlexLess::operator()(const Expo& a, const Expo& b) const {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (int i = kIdealVars - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Poly poly_var(int v) {
    if (v < 0 || v >= kIdealVars)
        throw std::invalid_argument("variable index out of range");
    Expo e{};
    e[v] = 1;
    return Poly{{e, Rational(1)}};
}

Poly poly_const(const Rational& c) {
    Poly f;
    if (c != 0) f.emplace(Expo{}, c);
    return f;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b) add_term(out, e, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b) add_term(out, e, -c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            add_term(out, sum_expo(ea, eb), ca * cb);
    return out;
}

Poly operator*(const Rational& c, const Poly& a) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [e, v] : a) out.emplace(e, c * v);
    return out;
}

Poly poly_pow(const Poly& a, unsigned e) {
    Poly out = poly_const(1);
    for (unsigned i = 0; i < e; ++i) out = out * a;
    return out;
}

Poly poly_diff(const Poly& a, int v) {
    Poly out;
    for (const auto& [e, c] : a) {
        if (e[v] == 0) continue;
        Expo d = e;
        d[v] -= 1;
        add_term(out, d, c * e[v]);
    }
    return out;
}

std::string poly_str(const Poly& a) {
    if (a.empty()) return "0";
    static const char* names[kIdealVars] = {"p", "q", "x1", "x2", "y"};
    std::ostringstream os;
    bool firstterm = true;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!firstterm) os << " + ";
        firstterm = false;
        os << "(" << c << ")";
        for (int v = 0; v < kIdealVars; ++v) {
            if (e[v] == 0) continue;
            os << "*" << names[v];
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

Poly poisson(const Poly& f, const Poly& g) {
    // pairs (x1 <-> p) and (x2 <-> q): slots (2,0) and (3,1)
    Poly out = poly_diff(f, 2) * poly_diff(g, 0) - poly_diff(f, 0) * poly_diff(g, 2);
    out = out + poly_diff(f, 3) * poly_diff(g, 1) - poly_diff(f, 1) * poly_diff(g, 3);
    return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
    Poly rem;
    Poly work = f;
    while (!work.empty()) {
        bool reduced = false;
        const auto& [le, lc] = leading(work);
        for (const auto& g : G) {
            if (g.empty()) continue;
            const auto& [ge, gc] = leading(g);
            if (!divides(ge, le)) continue;
            Rational factor = lc / gc;
            Expo shift = quotient(le, ge);
            Poly sub;
            for (const auto& [e, c] : g)
                sub.emplace(sum_expo(e, shift), factor * c);
            work = work - sub;
            reduced = true;
            break;
        }
        if (!reduced) {
            add_term(rem, le, lc);
            work.erase(std::prev(work.end()));
        }
    }
    return rem;
}

std::vector<Poly> buchberger(std::vector<Poly> gens) {
    std::vector<Poly> G;
    for (auto& g : gens)
        if (!g.empty()) G.push_back(std::move(g));
    if (G.empty()) return G;

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j)
            pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const auto& [ei, ci] = leading(G[i]);
        const auto& [ej, cj] = leading(G[j]);
        Expo l = lcm_expo(ei, ej);
        if (degree(l) == degree(ei) + degree(ej) && l == sum_expo(ei, ej))
            continue;  // coprime leading monomials
        Poly si, sj;
        {
            Expo shift = quotient(l, ei);
            for (const auto& [e, c] : G[i])
                si.emplace(sum_expo(e, shift), c / ci);
            shift = quotient(l, ej);
            for (const auto& [e, c] : G[j])
                sj.emplace(sum_expo(e, shift), c / cj);
        }
        Poly s = normal_form(si - sj, G);
        if (s.empty()) continue;
        for (size_t k = 0; k < G.size(); ++k)
            pairs.emplace_back(k, G.size());
        G.push_back(std::move(s));
    }

    // inter-reduce and normalize
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < G.size(); ++i) {
            Poly g = std::move(G[i]);
            G[i] = Poly();
            Poly r = normal_form(g, G);
            G[i] = std::move(r);
            if (!(G[i] == g)) changed = true;
        }
        G.erase(std::remove_if(G.begin(), G.end(),
                               [](const Poly& g) { return g.empty(); }),
                G.end());
    }
    for (auto& g : G) {
        Rational lc = leading(g).second;
        Poly monic;
        for (const auto& [e, c] : g) monic.emplace(e, c / lc);
        g = std::move(monic);
    }
    std::sort(G.begin(), G.end(), [](const Poly& a, const Poly& b) {
        return GrevlexLess()(leading(a).first, leading(b).first);
    });
    return G;
}

bool member(const Poly& f, const std::vector<Poly>& basis) {
    return normal_form(f, basis).empty();
}

bool radical_member(const Poly& f, const std::vector<Poly>& gens) {
    std::vector<Poly> aug = gens;
    aug.push_back(poly_const(1) - poly_var(4) * f);
    std::vector<Poly> basis = buchberger(std::move(aug));
    for (const auto& g : basis)
        if (g.size() == 1 && g.begin()->first == Expo{})
            return true;
    return false;
}

std::array<Poly, 3> singularity_generators() {
    Poly p = poly_var(0), q = poly_var(1), x1 = poly_var(2), x2 = poly_var(3);
    Poly P1 = Rational(1, 3) * (p * x2 * x2) - x1 * x1;
    Poly P2 = Rational(1, 2) * (q * x2 * x2 * x2) + x1 * x1 * x1;
    Poly P3 = (Rational(4) * poly_pow(p, 3) - Rational(27) * (q * q)) * (x1 * x1);
    return {P1, P2, P3};
}

bool conormal_identity_holds() {
    auto pows = [](const Rational& base, unsigned e) {
        Rational r = 1;
        for (unsigned i = 0; i < e; ++i) r *= base;
        return r;
    };
    for (const Poly& g : singularity_generators()) {
        // p -> 3 z^2, q -> -2 z^3, x1 -> z*l, x2 -> l
        std::map<std::pair<unsigned, unsigned>, Rational> image;
        for (const auto& [e, c] : g) {
            unsigned ze = 2u * e[0] + 3u * e[1] + e[2];
            unsigned le = e[2] + e[3];
            Rational v = c * pows(3, e[0]) * pows(-2, e[1]);
            auto [it, fresh] = image.try_emplace({ze, le}, v);
            if (!fresh) it->second += v;
        }
        for (const auto& [k, v] : image)
            if (v != 0) return false;
    }
    return true;
}

}  // namespace cusp
