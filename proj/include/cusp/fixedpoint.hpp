#pragma once
// Iterative construction of ramified series solutions of
//     u_tt - u_x * u_xx = 0
// of the form u = sum_k w_k(t,x) z^k with z^3 = p(t,x) z + q(t,x).
// State is the pair (p, q) plus the coefficient family b_k; one sweep of the
// map integrates a linearized eikonal system for (p, q) and a transport
// equation for every b_k, losing three b-components per sweep.
//
// Two update variants are provided. `standard` keeps two quirks of the
// classic scheme this project reproduces (the time-curvature term p_tt in
// the spatial transport bracket, and the undivided coupling sum C_k);
// `exact` replaces them with p_xx and C_k/3, which makes a fixed point of
// the sweep solve the PDE identically.

#include "cusp/series.hpp"
#include "cusp/zring.hpp"

#include <string>
#include <vector>

namespace cusp {

enum class UpdateMode { standard, exact };

struct SolutionData {
    TruncatedSeries2 p, q;
    std::vector<TruncatedSeries2> b;
    // Sign of q_t(0,0): selects the z-branch that is continuous from the
    // principal cube root of q (+1) or from its mirror (-1) when the data
    // are evaluated numerically.
    int root_choice = +1;
};

struct FixedPointConfig {
    unsigned order = 25;        // series order M (total degree < M)
    unsigned data_length = 80;  // number of b-components N
    unsigned iterations = 25;   // sweeps I; requires N >= 3*I + 5
    unsigned digits = 30;
    UpdateMode mode = UpdateMode::standard;
    Coeff probe = Coeff(Real(0), Real(1) / 10);  // x0 for diff norms
    Segment segment{0.0, 0.1, 1001};
};

// Initial data from a fractional-power datum
//     u(0, x) = sum_k cs[k] * x^((k+3)/3),
// placed canonically: p = 0, q = x, b_k(0, x) = ((k+3)/3) * cs[k].
// The first two entries must be nonzero.
struct CauchyDatum {
    std::vector<Coeff> cs;
};
SolutionData datum_to_initial(const CauchyDatum& d, unsigned order,
                              unsigned data_length);

// One sweep of the fixed-point map.
SolutionData map_F(const SolutionData& d, const FixedPointConfig& cfg);

// Pre-integration eikonal solve of one sweep (pdot = dp_hat/dt etc.);
// exposed for direct inspection of the iteration-1 values.
struct EikonalStep {
    TruncatedSeries2 pdot, qdot;
};
EikonalStep eikonal_step(const SolutionData& d, const FixedPointConfig& cfg);

struct IterationRow {
    unsigned iteration;     // 1-based
    std::string component;  // "p", "q", "b0", ...
    Real norm;              // sup |new - old| at the probe point
};

struct IterationReport {
    std::vector<IterationRow> rows;
    std::vector<double> runtimes_sec;  // one entry per sweep
    Real residual_norm = Real(0);
};

struct IterateResult {
    SolutionData data;
    IterationReport report;
};

// Run `iterations` sweeps, recording per-component difference norms for the
// components that survive to the end (p, q, b_0 .. b_{N-3I-1}). Numeric
// failures are rethrown with the sweep index in the message.
IterateResult iterate(const SolutionData& d0, const FixedPointConfig& cfg);

// Ring element u = sum w_k z^k reconstructed from the data
// (w = q-primitive of the b-family; variables stay (t, x)).
ZElement reconstruct_u(const SolutionData& d);

// Defect of u_tt - u_x u_xx at the data, split into the ring part and the
// singular numerator (coefficients of 1/(3z^2 - p)). `norm` is the largest
// segment sup (same probe convention as the iteration diffs) over the ring
// coefficients and the two division remainders of the singular part; the
// sup form keeps the diagnostic meaningful for short coefficient families,
// whose raw high-degree coefficients carry O(1) truncation remnants. All
// parts vanish at a fixed point of the chosen update variant.
struct ResidualParts {
    ZElement regular;
    ZElement singular;
    Real norm;
};
ResidualParts residual(const SolutionData& d, UpdateMode mode,
                       const Coeff& probe = Coeff(Real(0), Real(1) / 10),
                       const Segment& segment = Segment{0.0, 0.1, 1001});

// Numeric value of u at a point, using the data's root choice.
Coeff eval_u(const SolutionData& d, const Coeff& t, const Coeff& x);

}  // namespace cusp
