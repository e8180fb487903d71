#pragma once
// Shock formation for u_t - u u_x = 0 seen through the cubic family
// u = a(t,x) + z(t,x), z^3 = p z + q:
//   * power-series solution of the characteristic system
//         q_t = a q_x + (1/3) p p_x,  p_t = a p_x + q_x,  a_t = (1/3) p_x
//     with a(0,x) = a0(x), p(0,x) = 0, q(0,x) = x;
//   * numeric continuation of cubic roots along paths in the (p,q) plane
//     and the induced monodromy permutations;
//   * the explicit contact flow blowing up at the caustic;
//   * closed-form shock times for the square-root datum;
//   * characteristic fields of the first-order reduction.

#include "cusp/series.hpp"
#include "cusp/zring.hpp"

#include <array>
#include <utility>
#include <vector>

namespace cusp {

struct CKState {
    TruncatedSeries2 a, p, q;
};

// Degree-by-degree solve; a0 must depend on x only.
CKState ck_solve(const TruncatedSeries2& a0, unsigned order);

// Max coefficient of the three characteristic equations (degree M-2 window).
// Zero for every admissible a0.
Real system_residual(const CKState& st);

// Max coefficient of the four z-power identities behind the construction
// (these include the a_x cancellations, so this vanishes only when a0 is
// constant).
Real burgers_residual(const CKState& st);

// Piecewise-linear path in the (p, q) plane.
struct PathPQ {
    std::vector<std::pair<Coeff, Coeff>> points;
};

// Track one root of z^3 = p z + q along the path by predictor-corrector
// continuation with adaptive segment bisection. Throws NumericError when a
// path point comes within 1e-8 of the discriminant locus or refinement
// fails.
Coeff continue_root(const PathPQ& path, const Coeff& z0);

// Permutation of the three (Re, Im)-sorted roots at the basepoint after
// transport around a closed path: result[i] is the index the i-th root
// lands on.
std::array<int, 3> monodromy(const PathPQ& loop);

// Flow of the characteristic vector field through the ramified initial
// point over x > 0: position (t, y), value u, and the conormal components
// (tau, xi), which blow up at s = 3 x^(2/3).
struct ContactPoint {
    Real t, y, u, tau, xi;
};
ContactPoint contact_flow(const Real& x, const Real& s);

// Square-root datum u(0,x) = sqrt(x), x0 < x1: time the characteristic at
// x0 enters the caustic and time it is absorbed by the shock through x1.
struct ShockTimes {
    Real t0, tstar;
};
ShockTimes shock_times(const Real& x0, const Real& x1);

// delta(t, x) = x - sqrt(x) t + t^2/4 (discriminant of u^2 - t u - y at
// y = x - sqrt(x) t); vanishes exactly at t = 2 sqrt(x).
Real shock_delta(const Real& t, const Real& x);

// The two branches t/2 +- sqrt(delta) of u^2 - t u - y = 0 along x = x0.
std::pair<Real, Real> branch_values(const Real& t, const Real& x0);

// Characteristic fields of v_t = A(v) v_x for the m-th order reduction
// (A = transposed companion matrix of lambda^m - v1): eigenvalue, eigenvector
// omega = (1, lambda, ..., lambda^(m-1)), and the genuine-nonlinearity
// pairing <d lambda, omega> = lambda / (m v1).
struct CharField {
    Coeff lambda;
    std::vector<Coeff> omega;
    Coeff pairing;
};
std::vector<CharField> characteristic_fields(unsigned m, const Coeff& v1);

// The matrix A(v1) itself (for spot checks).
std::vector<std::vector<Coeff>> companion_matrix(unsigned m, const Coeff& v1);

}  // namespace cusp
