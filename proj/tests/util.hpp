// Shared helpers for the test binaries.
#pragma once

#include <initializer_list>

#include "cusp/series.hpp"

namespace testutil {

using cusp::Coeff;
using cusp::Real;
using cusp::TruncatedSeries2;

inline Real rat(const char* num, const char* den) {
    return Real(num) / Real(den);
}

// Exact rational coefficient of t^l x^m, for freezing reference tables.
struct RatTerm {
    unsigned l, m;
    const char* num;
    const char* den;
};

inline TruncatedSeries2 series_of(std::initializer_list<RatTerm> terms,
                                  unsigned order) {
    TruncatedSeries2 s(order);
    for (const RatTerm& t : terms)
        s.set_coeff(t.l, t.m, Coeff(rat(t.num, t.den), Real(0)));
    return s;
}

inline Real dist(const Coeff& a, const Coeff& b) {
    return cusp::coeff_abs(a - b);
}

// Largest deviation between s and a frozen table (checks both directions:
// every table entry and every series term).
template <typename Table>
Real table_dist(const TruncatedSeries2& s, const Table& table, size_t n) {
    Real worst(0);
    TruncatedSeries2 ref(s.order());
    for (size_t i = 0; i < n; ++i)
        ref.set_coeff(table[i].l, table[i].m,
                      Coeff(rat(table[i].num, table[i].den), Real(0)));
    TruncatedSeries2 diff = s - ref;
    for (const auto& [key, c] : diff.terms()) {
        (void)key;
        Real a = cusp::coeff_abs(c);
        if (a > worst) worst = a;
    }
    return worst;
}

}  // namespace testutil
