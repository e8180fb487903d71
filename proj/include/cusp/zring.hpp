#pragma once
// Elements of O[[z]] subject to the cubic relation z^3 = p*z + q.
// An element is a coefficient vector (c[k] multiplies z^k) over truncated
// bivariate series, together with the relation pair (p, q).
//
// For the calculus operations (q-primitive, q/p-derivatives) the two series
// variables are read as (p, q) themselves: slot t <-> p, slot x <-> q.
// The purely algebraic operations (reduce, zmul, division by 3z^2 - p) never
// differentiate coefficients and work for any variable meaning.

#include "cusp/series.hpp"

#include <array>
#include <vector>

namespace cusp {

struct ZElement {
    std::vector<TruncatedSeries2> coeffs;
    TruncatedSeries2 p, q;
};

ZElement make_element(std::vector<TruncatedSeries2> coeffs,
                      TruncatedSeries2 p, TruncatedSeries2 q);

// Collapse to degree < 3 using z^k = p z^(k-2) + q z^(k-3).
ZElement reduce(const ZElement& u);

// Product in the quotient ring (full convolution, then reduce).
ZElement zmul(const ZElement& u, const ZElement& v);

// Division of the coefficient polynomial by (3 z^2 - p):
//   sum u_k z^k = (3z^2 - p) * quotient + rem0 + rem1 * z.
struct RingDivision {
    std::vector<TruncatedSeries2> quotient;
    TruncatedSeries2 rem0, rem1;
};
RingDivision divide_by_critical(const ZElement& u);

// w with dw/dq = u for coefficients that do not depend on q:
//   w_j = (1/j) * (-p u_{j-1} + 3 u_{j-3}),   w_0 = 0.
ZElement primitive_q(const ZElement& u);

// Total q-derivative: term-wise d/dq plus the chain contribution
// z_q = 1/(3z^2 - p). Requires the chain numerator to divide exactly;
// throws NumericError carrying the remainder norm otherwise. `tol`
// defaults to 10^-(digits-8).
ZElement diff_q(const ZElement& u, const Real* tol = nullptr);

// Total p-derivative of the q-primitive image of `a` (the caller passes the
// pre-primitive coefficients). The chain part is exact:
//   d/dp primitive(a) = sum (1/j)(-a_{j-1} - p a'_{j-1} + 3 a'_{j-3}) z^j
//                       + z * sum a_k z^k.
ZElement diff_p_of_primitive(const ZElement& a);

// Evaluate with coefficient variables read as (p, q).
Coeff eval_element(const ZElement& u, const Coeff& p0, const Coeff& q0,
                   const Coeff& z0);

Real max_abs_coeff(const ZElement& u);

// Roots of z^3 = p0 z + q0, sorted lexicographically by (Re, Im).
std::array<Coeff, 3> cubic_roots(const Coeff& p0, const Coeff& q0);

// 4 p^3 - 27 q^2 (vanishes exactly when the cubic has a multiple root).
Coeff discriminant(const Coeff& p0, const Coeff& q0);

}  // namespace cusp
