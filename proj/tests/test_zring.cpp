#include <catch2/catch.hpp>
#include <random>
#include <string>
#include <vector>

#include "cusp/expr.hpp"
#include "cusp/zring.hpp"
#include "util.hpp"

using namespace cusp;
using testutil::rat;

namespace {

// coefficient variables are read as (p, q) = (t, x)
ZElement elem(const std::vector<std::string>& exprs, unsigned M) {
    std::vector<TruncatedSeries2> cs;
    cs.reserve(exprs.size());
    for (const std::string& e : exprs) cs.push_back(parse_series(e, M));
    return make_element(std::move(cs), TruncatedSeries2::var_t(M),
                        TruncatedSeries2::var_x(M));
}

Real elem_dist(const ZElement& u, const std::vector<std::string>& exprs,
               unsigned M) {
    Real worst(0);
    size_t n = std::max(u.coeffs.size(), exprs.size());
    for (size_t k = 0; k < n; ++k) {
        TruncatedSeries2 d(M);
        if (k < u.coeffs.size()) d += u.coeffs[k];
        if (k < exprs.size()) d -= parse_series(exprs[k], M);
        Real a = d.max_abs_coeff();
        if (a > worst) worst = a;
    }
    return worst;
}

Coeff nearest_root(const std::array<Coeff, 3>& roots, const Coeff& target) {
    Coeff best = roots[0];
    Real bd = coeff_abs(roots[0] - target);
    for (int i = 1; i < 3; ++i) {
        Real d = coeff_abs(roots[i] - target);
        if (d < bd) {
            bd = d;
            best = roots[i];
        }
    }
    return best;
}

}  // namespace

TEST_CASE("weierstrass reduction") {
    set_precision(30);
    unsigned M = 6;

    ZElement z5 = elem({"0", "0", "0", "0", "0", "1"}, M);
    ZElement r = reduce(z5);
    REQUIRE(r.coeffs.size() == 3);
    REQUIRE(elem_dist(r, {"t*x", "t^2", "x"}, M) == 0);

    ZElement z3 = elem({"0", "0", "0", "1"}, M);
    REQUIRE(elem_dist(reduce(z3), {"x", "t", "0"}, M) == 0);

    ZElement low = elem({"1", "t", "x"}, M);
    REQUIRE(elem_dist(reduce(low), {"1", "t", "x"}, M) == 0);

    // reduction preserves values on every branch of the cubic
    Coeff p0(rat("3", "10"), Real(0)), q0(rat("6", "5"), Real(0));
    ZElement big = elem({"1", "t", "2", "x", "t*x", "0", "3"}, M);
    ZElement red = reduce(big);
    for (const Coeff& z0 : cubic_roots(p0, q0)) {
        Coeff a = eval_element(big, p0, q0, z0);
        Coeff b = eval_element(red, p0, q0, z0);
        REQUIRE(coeff_abs(a - b) < pow10(-24));
    }
}

TEST_CASE("ring product") {
    set_precision(30);
    unsigned M = 6;
    ZElement u = elem({"t", "1", "2"}, M);
    ZElement v = elem({"x", "3", "1"}, M);
    ZElement w = zmul(u, v);
    REQUIRE(w.coeffs.size() == 3);
    REQUIRE(elem_dist(w, {"t*x + 7*x", "10*t + 3*x", "3*t + 2*x + 3"}, M) == 0);

    ZElement wr = zmul(v, u);
    for (size_t k = 0; k < 3; ++k) REQUIRE(w.coeffs[k] == wr.coeffs[k]);
}

TEST_CASE("division by the critical factor") {
    set_precision(30);
    unsigned M = 6;
    // (3z^2 - p)(c0 + c1 z) + r0 + r1 z, with c0 = 1 + t, c1 = x, r0 = 2, r1 = t
    ZElement u = elem({"-t*(1 + t) + 2", "-t*x + t", "3*(1 + t)", "3*x"}, M);
    RingDivision d = divide_by_critical(u);
    REQUIRE(d.quotient.size() == 2);
    REQUIRE(d.quotient[0] == parse_series("1 + t", M));
    REQUIRE(d.quotient[1] == parse_series("x", M));
    REQUIRE(d.rem0 == parse_series("2", M));
    REQUIRE(d.rem1 == parse_series("t", M));
}

TEST_CASE("q-primitive reference tables") {
    set_precision(30);
    unsigned M = 8;

    ZElement a = elem({"1 + t", "x", "t*x"}, M);
    ZElement w = primitive_q(a);
    REQUIRE(w.coeffs.size() == 6);
    REQUIRE(elem_dist(w,
                      {"0", "-t^2 - t", "-t*x/2", "-t^2*x/3 + t + 1",
                       "3*x/4", "3*t*x/5"},
                      M) < pow10(-28));

    // primitive of z reduces to (3 q z + p z^2)/4, exactly
    ZElement pz = reduce(primitive_q(elem({"0", "1"}, M)));
    REQUIRE(pz.coeffs[0].is_zero());
    REQUIRE(pz.coeffs[1] == parse_series("3*x/4", M));
    REQUIRE(pz.coeffs[2] == parse_series("t/4", M));

    // primitive of 1 is z^3 - p z, whose p-derivative vanishes identically
    ZElement one = elem({"1"}, M);
    REQUIRE(elem_dist(primitive_q(one), {"0", "-t", "0", "1"}, M) == 0);
    ZElement dp = diff_p_of_primitive(one);
    for (const TruncatedSeries2& c : dp.coeffs) REQUIRE(c.is_zero());

    ZElement zero = elem({"0"}, M);
    for (const TruncatedSeries2& c : primitive_q(zero).coeffs)
        REQUIRE(c.is_zero());
}

TEST_CASE("total q-derivative inverts the primitive") {
    set_precision(30);
    unsigned M = 8;
    ZElement a = elem({"t + 1", "t^2", "2 - t"}, M);
    ZElement w = primitive_q(a);
    REQUIRE(elem_dist(w,
                      {"0", "-t^2 - t", "-t^3/2", "t^2/3 + t/3 + 1",
                       "3*t^2/4", "6/5 - 3*t/5"},
                      M) < pow10(-28));

    ZElement back = diff_q(w);
    REQUIRE(elem_dist(back, {"t + 1", "t^2", "2 - t"}, M) < pow10(-26));

    // z^2 is not a total q-derivative: the chain numerator does not divide
    ZElement z2 = elem({"0", "0", "1"}, M);
    REQUIRE_THROWS_AS(diff_q(z2), NumericError);
    try {
        diff_q(z2);
    } catch (const NumericError& e) {
        REQUIRE(e.residual > Real(1));  // remainder is 2z
    }
}

TEST_CASE("total p-derivative of a primitive image") {
    set_precision(30);
    unsigned M = 8;
    ZElement a = elem({"t + 1", "t^2", "2 - t"}, M);
    ZElement D = diff_p_of_primitive(a);
    REQUIRE(elem_dist(D,
                      {"0", "-t", "-t^2/2", "7/3 - t/3", "3*t/2", "-3/5"},
                      M) < pow10(-28));

    // frozen point values on all three branches at (p, q) = (1/10, 1/5)
    Coeff p0(rat("1", "10"), Real(0)), q0(rat("1", "5"), Real(0));
    auto roots = cubic_roots(p0, q0);
    REQUIRE(coeff_abs(roots[2] - Coeff(Real("0.64163964721946637137"),
                                       Real(0))) < pow10(-18));
    Coeff v2 = eval_element(D, p0, q0, roots[2]);
    REQUIRE(coeff_abs(v2 - Coeff(Real("0.50152534761456648268"), Real(0))) <
            pow10(-18));
    Coeff v0 = eval_element(D, p0, q0, roots[0]);
    REQUIRE(coeff_abs(v0 - Coeff(Real("0.41023732619271675866"),
                                 Real("-0.10261530564055912173"))) <
            pow10(-18));
    Coeff v1 = eval_element(D, p0, q0, roots[1]);
    REQUIRE(coeff_abs(v1 - conj(v0)) < pow10(-24));

    // finite differences in p, moving the branch along, agree with D
    ZElement w = primitive_q(a);
    Real h = pow10(-10);
    for (int i = 0; i < 3; ++i) {
        Coeff base = roots[i];
        Coeff zp = nearest_root(cubic_roots(p0 + Coeff(h, Real(0)), q0), base);
        Coeff zm = nearest_root(cubic_roots(p0 - Coeff(h, Real(0)), q0), base);
        Coeff fp = eval_element(w, p0 + Coeff(h, Real(0)), q0, zp);
        Coeff fm = eval_element(w, p0 - Coeff(h, Real(0)), q0, zm);
        Coeff fd = (fp - fm) / Coeff(2 * h, Real(0));
        REQUIRE(coeff_abs(fd - eval_element(D, p0, q0, roots[i])) <
                pow10(-6));
    }
}

TEST_CASE("primitive round trip on random p-polynomial elements") {
    set_precision(30);
    unsigned M = 8;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dcoef(-5, 5);
    std::uniform_int_distribution<int> ddeg(0, 3);
    std::uniform_int_distribution<int> dlen(1, 6);

    TruncatedSeries2 P = TruncatedSeries2::var_t(M);
    TruncatedSeries2 Q = TruncatedSeries2::var_x(M);
    Real worst(0);
    for (int trial = 0; trial < 100; ++trial) {
        size_t len = static_cast<size_t>(dlen(rng));
        std::vector<TruncatedSeries2> cs(len, TruncatedSeries2(M));
        for (TruncatedSeries2& c : cs) {
            int deg = ddeg(rng);
            for (int d = 0; d <= deg; ++d)
                c.set_coeff(static_cast<unsigned>(d), 0, Coeff(dcoef(rng)));
        }
        ZElement a = make_element(cs, P, Q);
        ZElement back = diff_q(primitive_q(a));
        for (size_t k = 0; k < back.coeffs.size(); ++k) {
            TruncatedSeries2 d = back.coeffs[k];
            if (k < a.coeffs.size()) d -= a.coeffs[k];
            Real m = d.max_abs_coeff();
            if (m > worst) worst = m;
        }
    }
    REQUIRE(worst < pow10(-24));
}

TEST_CASE("cubic roots and discriminant") {
    set_precision(30);
    // z^3 = 8: roots 2, 2w, 2w^2, sorted lexicographically
    auto roots = cubic_roots(Coeff(0), Coeff(8));
    Real s3 = sqrt(Real(3));
    REQUIRE(coeff_abs(roots[0] - Coeff(Real(-1), -s3)) < pow10(-25));
    REQUIRE(coeff_abs(roots[1] - Coeff(Real(-1), s3)) < pow10(-25));
    REQUIRE(coeff_abs(roots[2] - Coeff(2)) < pow10(-25));

    Coeff sum = roots[0] + roots[1] + roots[2];
    Coeff prod = roots[0] * roots[1] * roots[2];
    REQUIRE(coeff_abs(sum) < pow10(-25));
    REQUIRE(coeff_abs(prod - Coeff(8)) < pow10(-25));

    // every root satisfies its cubic, including a complex relation pair
    Coeff p0(rat("1", "2"), rat("1", "3")), q0(rat("-2", "7"), rat("1", "9"));
    for (const Coeff& z : cubic_roots(p0, q0))
        REQUIRE(coeff_abs(z * z * z - p0 * z - q0) < pow10(-24));

    REQUIRE(discriminant(Coeff(3), Coeff(2)) == Coeff(0));
    REQUIRE(discriminant(Coeff(0), Coeff(8)) == Coeff(-1728));
}
