#pragma once
// Truncated bivariate power series over arbitrary-precision complex
// coefficients. A series of order M keeps monomials c * t^l * x^m with
// l + m <= M-1; every operation drops anything at or above total degree M.
// The two variables are called t and x throughout, but nothing in here cares
// what they mean (the ring code reuses the type with (t,x) read as (p,q)).

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cusp {

namespace mp = boost::multiprecision;
using Real  = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Coeff = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

// Configuration error (bad arguments, malformed input, violated invariants).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numeric failure at run time (singular matrix, failed division, ...).
// `residual` carries the offending magnitude when one exists.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what, Real r = Real(0))
        : std::runtime_error(what), residual(std::move(r)) {}
    Real residual;
};

// Working precision in decimal digits. Applies to values constructed after
// the call; minimum 15. Default is 30.
void set_precision(unsigned digits);
unsigned precision();

Real coeff_abs(const Coeff& c);
Real pow10(int e);

// Sampling window for sup-norm estimates: `samples` equispaced points on
// the real interval [a, b].
struct Segment {
    double a = 0.0;
    double b = 0.1;
    int samples = 1001;
};

class TruncatedSeries2 {
public:
    using Term = std::pair<uint16_t, Coeff>;  // key = (l << 8) | m

    TruncatedSeries2() = default;
    explicit TruncatedSeries2(unsigned order);

    static TruncatedSeries2 constant(const Coeff& c, unsigned order);
    static TruncatedSeries2 var_t(unsigned order);
    static TruncatedSeries2 var_x(unsigned order);

    unsigned order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    Coeff coeff(unsigned l, unsigned m) const;
    void set_coeff(unsigned l, unsigned m, const Coeff& c);

    TruncatedSeries2 diff_t() const;
    TruncatedSeries2 diff_x() const;

    // Antiderivative in t. `init` supplies the t^0 slice and must only
    // contain x-monomials.
    TruncatedSeries2 integrate_t(const TruncatedSeries2& init) const;

    // Multiplicative inverse mod degree `order`. Requires a constant term
    // with magnitude above 10^-(digits-5).
    TruncatedSeries2 reciprocal() const;

    TruncatedSeries2 truncated(unsigned new_order) const;

    Coeff eval(const Coeff& t, const Coeff& x) const;

    // max |eval(t_i, x0)| over the segment's sample points.
    Real sup_norm(const Coeff& x0, const Segment& seg) const;

    Real max_abs_coeff() const;

    TruncatedSeries2& operator+=(const TruncatedSeries2& o);
    TruncatedSeries2& operator-=(const TruncatedSeries2& o);

    friend TruncatedSeries2 operator+(const TruncatedSeries2& a, const TruncatedSeries2& b);
    friend TruncatedSeries2 operator-(const TruncatedSeries2& a, const TruncatedSeries2& b);
    friend TruncatedSeries2 operator-(const TruncatedSeries2& a);
    friend TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b);
    friend TruncatedSeries2 operator*(const Coeff& c, const TruncatedSeries2& a);
    friend TruncatedSeries2 operator*(const TruncatedSeries2& a, const Coeff& c);
    friend bool operator==(const TruncatedSeries2& a, const TruncatedSeries2& b);

private:
    void normalize(std::vector<Term>&& raw);

    unsigned order_ = 0;
    std::vector<Term> terms_;  // sorted by key, no zero entries
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries2& s);

}  // namespace cusp
