#include "cusp/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cusp {

namespace {
unsigned g_digits = 30;
unsigned key_l(uint16_t k) { return k >> 8; }
unsigned key_m(uint16_t k) { return k & 0xff; }
uint16_t make_key(unsigned l, unsigned m) {
    if (l > 0xff || m > 0xff)
        throw ConfigError("series exponent out of range");
    return static_cast<uint16_t>((l << 8) | m);
}
}  // namespace

void set_precision(unsigned digits) {
    if (digits < 15)
        throw ConfigError("precision below 15 digits is not supported");
    Real::default_precision(digits);
    g_digits = digits;
}

unsigned precision() { return g_digits; }

Real coeff_abs(const Coeff& c) { return abs(c); }

Real pow10(int e) { return pow(Real(10), e); }

namespace {
struct PrecisionInit {
    PrecisionInit() { Real::default_precision(30); }
} g_precision_init;
}  // namespace

TruncatedSeries2::TruncatedSeries2(unsigned order) : order_(order) {
    if (order == 0)
        throw ConfigError("series order must be positive");
}

TruncatedSeries2 TruncatedSeries2::constant(const Coeff& c, unsigned order) {
    TruncatedSeries2 s(order);
    s.set_coeff(0, 0, c);
    return s;
}

TruncatedSeries2 TruncatedSeries2::var_t(unsigned order) {
    TruncatedSeries2 s(order);
    s.set_coeff(1, 0, Coeff(1));
    return s;
}

TruncatedSeries2 TruncatedSeries2::var_x(unsigned order) {
    TruncatedSeries2 s(order);
    s.set_coeff(0, 1, Coeff(1));
    return s;
}

Coeff TruncatedSeries2::coeff(unsigned l, unsigned m) const {
    if (l + m >= order_) return Coeff(0);
    uint16_t key = make_key(l, m);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, uint16_t k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return Coeff(0);
}

void TruncatedSeries2::set_coeff(unsigned l, unsigned m, const Coeff& c) {
    if (order_ == 0)
        throw ConfigError("series has no order set");
    if (l + m >= order_) {
        if (coeff_abs(c) != 0)
            throw ConfigError("coefficient beyond series order");
        return;
    }
    uint16_t key = make_key(l, m);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, uint16_t k) { return t.first < k; });
    bool present = it != terms_.end() && it->first == key;
    if (coeff_abs(c) == 0) {
        if (present) terms_.erase(it);
        return;
    }
    if (present)
        it->second = c;
    else
        terms_.insert(it, {key, c});
}

void TruncatedSeries2::normalize(std::vector<Term>&& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    terms_.clear();
    terms_.reserve(raw.size());
    for (auto& [key, c] : raw) {
        if (key_l(key) + key_m(key) >= order_) continue;
        if (!terms_.empty() && terms_.back().first == key)
            terms_.back().second += c;
        else
            terms_.emplace_back(key, c);
    }
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return coeff_abs(t.second) == 0; }),
                 terms_.end());
}

namespace {
void check_orders(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    if (a.order() != b.order())
        throw ConfigError("series order mismatch");
}
}  // namespace

TruncatedSeries2& TruncatedSeries2::operator+=(const TruncatedSeries2& o) {
    *this = *this + o;
    return *this;
}

TruncatedSeries2& TruncatedSeries2::operator-=(const TruncatedSeries2& o) {
    *this = *this - o;
    return *this;
}

TruncatedSeries2 operator+(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    check_orders(a, b);
    TruncatedSeries2 out(a.order());
    std::vector<TruncatedSeries2::Term> raw;
    raw.reserve(a.terms_.size() + b.terms_.size());
    raw.insert(raw.end(), a.terms_.begin(), a.terms_.end());
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    out.normalize(std::move(raw));
    return out;
}

TruncatedSeries2 operator-(const TruncatedSeries2& a) {
    TruncatedSeries2 out(a.order());
    out.terms_ = a.terms_;
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
}

TruncatedSeries2 operator-(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    return a + (-b);
}

TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    check_orders(a, b);
    TruncatedSeries2 out(a.order());
    if (a.is_zero() || b.is_zero()) return out;
    unsigned cap = a.order() - 1;
    std::vector<TruncatedSeries2::Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            unsigned l = key_l(ka) + key_l(kb);
            unsigned m = key_m(ka) + key_m(kb);
            if (l + m <= cap) raw.emplace_back(make_key(l, m), ca * cb);
        }
    out.normalize(std::move(raw));
    return out;
}

TruncatedSeries2 operator*(const Coeff& c, const TruncatedSeries2& a) {
    TruncatedSeries2 out(a.order());
    if (coeff_abs(c) == 0) return out;
    out.terms_ = a.terms_;
    for (auto& [key, v] : out.terms_) v *= c;
    return out;
}

TruncatedSeries2 operator*(const TruncatedSeries2& a, const Coeff& c) { return c * a; }

bool operator==(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
}

TruncatedSeries2 TruncatedSeries2::diff_t() const {
    TruncatedSeries2 out(order_);
    out.terms_.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
        unsigned l = key_l(key);
        if (l == 0) continue;
        out.terms_.emplace_back(make_key(l - 1, key_m(key)), c * static_cast<int>(l));
    }
    return out;
}

TruncatedSeries2 TruncatedSeries2::diff_x() const {
    TruncatedSeries2 out(order_);
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
        unsigned m = key_m(key);
        if (m == 0) continue;
        raw.emplace_back(make_key(key_l(key), m - 1), c * static_cast<int>(m));
    }
    out.normalize(std::move(raw));
    return out;
}

TruncatedSeries2 TruncatedSeries2::integrate_t(const TruncatedSeries2& init) const {
    check_orders(*this, init);
    TruncatedSeries2 out(order_);
    std::vector<Term> raw;
    raw.reserve(terms_.size() + init.terms_.size());
    for (const auto& [key, c] : terms_) {
        unsigned l = key_l(key) + 1;
        unsigned m = key_m(key);
        if (l + m <= order_ - 1)
            raw.emplace_back(make_key(l, m), c / static_cast<int>(l));
    }
    for (const auto& [key, c] : init.terms_) {
        if (key_l(key) != 0)
            throw ConfigError("integration initial slice has t-dependence");
        raw.emplace_back(key, c);
    }
    out.normalize(std::move(raw));
    return out;
}

TruncatedSeries2 TruncatedSeries2::reciprocal() const {
    Coeff c0 = coeff(0, 0);
    if (coeff_abs(c0) <= pow10(-static_cast<int>(precision()) + 5))
        throw NumericError("series reciprocal: constant term too small",
                           coeff_abs(c0));
    TruncatedSeries2 r = constant(Coeff(1) / c0, order_);
    TruncatedSeries2 two = constant(Coeff(2), order_);
    int steps = 1;
    while ((1u << steps) < order_) ++steps;
    for (int i = 0; i <= steps; ++i)
        r = r * (two - *this * r);
    return r;
}

TruncatedSeries2 TruncatedSeries2::truncated(unsigned new_order) const {
    if (new_order == 0)
        throw ConfigError("series order must be positive");
    TruncatedSeries2 out(new_order);
    std::vector<Term> raw(terms_.begin(), terms_.end());
    out.normalize(std::move(raw));
    return out;
}

Coeff TruncatedSeries2::eval(const Coeff& t, const Coeff& x) const {
    unsigned maxl = 0, maxm = 0;
    for (const auto& [key, c] : terms_) {
        maxl = std::max(maxl, key_l(key));
        maxm = std::max(maxm, key_m(key));
    }
    std::vector<Coeff> tp(maxl + 1), xp(maxm + 1);
    tp[0] = Coeff(1);
    for (unsigned i = 1; i <= maxl; ++i) tp[i] = tp[i - 1] * t;
    xp[0] = Coeff(1);
    for (unsigned i = 1; i <= maxm; ++i) xp[i] = xp[i - 1] * x;
    Coeff acc(0);
    for (const auto& [key, c] : terms_)
        acc += c * tp[key_l(key)] * xp[key_m(key)];
    return acc;
}

Real TruncatedSeries2::sup_norm(const Coeff& x0, const Segment& seg) const {
    if (seg.samples < 2 || !(seg.a < seg.b))
        throw ConfigError("invalid sampling segment");
    Real a(seg.a), width = Real(seg.b) - Real(seg.a);
    Real best(0);
    for (int i = 0; i < seg.samples; ++i) {
        Real t = a + width * i / (seg.samples - 1);
        Real v = coeff_abs(eval(Coeff(t), x0));
        if (v > best) best = v;
    }
    return best;
}

Real TruncatedSeries2::max_abs_coeff() const {
    Real best(0);
    for (const auto& [key, c] : terms_) {
        Real v = coeff_abs(c);
        if (v > best) best = v;
    }
    return best;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries2& s) {
    if (s.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [key, c] : s.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(10) << ")";
        unsigned l = key >> 8, m = key & 0xff;
        if (l) os << "*t^" << l;
        if (m) os << "*x^" << m;
    }
    return os;
}

}  // namespace cusp
