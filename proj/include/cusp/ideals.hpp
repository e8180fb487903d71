#pragma once
// Exact polynomial algebra over Q in the variables (p, q, x1, x2) plus one
// auxiliary variable for radical-membership tests. Monomial order is
// graded reverse lexicographic with p > q > x1 > x2 > aux.
//
// Ships the three generators of the singularity ideal studied by the
// solver, a Poisson bracket for the canonical pairs (x1 <-> p, x2 <-> q),
// a plain Buchberger engine with reduced-basis normalization, and radical
// membership via the auxiliary-variable trick.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cusp {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kIdealVars = 5;  // p, q, x1, x2, aux
using Expo = std::array<uint16_t, kIdealVars>;

struct GrevlexLess {
    bool operator()(const Expo& a, const Expo& b) const;
};

using Poly = std::map<Expo, Rational, GrevlexLess>;

Poly poly_var(int v);
Poly poly_const(const Rational& c);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, const Poly& a);
Poly poly_pow(const Poly& a, unsigned e);
Poly poly_diff(const Poly& a, int v);

std::string poly_str(const Poly& a);

// {f, g} over the canonical pairs (x1, p) and (x2, q).
Poly poisson(const Poly& f, const Poly& g);

// Remainder of f modulo the (not necessarily reduced) basis G.
Poly normal_form(const Poly& f, const std::vector<Poly>& G);

// Reduced monic basis, sorted by leading monomial. Deterministic:
// independent of generator order.
std::vector<Poly> buchberger(std::vector<Poly> gens);

bool member(const Poly& f, const std::vector<Poly>& basis);

// f in radical(gens) via a basis for gens + (1 - aux * f).
bool radical_member(const Poly& f, const std::vector<Poly>& gens);

// The singularity ideal generators:
//   P1 = (p/3) x2^2 - x1^2
//   P2 = (q/2) x2^3 + x1^3
//   P3 = (4 p^3 - 27 q^2) x1^2
std::array<Poly, 3> singularity_generators();

// All three generators vanish identically under the conormal substitution
// p = 3 z^2, q = -2 z^3, x1 = z * l, x2 = l.
bool conormal_identity_holds();

}  // namespace cusp
