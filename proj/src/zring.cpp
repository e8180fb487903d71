#include "cusp/zring.hpp"

#include <algorithm>
#include <complex>
#include <cmath>

namespace cusp {

namespace {
void check_element(const ZElement& u) {
    if (u.coeffs.empty())
        throw ConfigError("ring element has no coefficients");
    unsigned M = u.p.order();
    if (M == 0 || u.q.order() != M)
        throw ConfigError("ring element relation orders disagree");
    for (const auto& c : u.coeffs)
        if (c.order() != M)
            throw ConfigError("ring element coefficient order mismatch");
}

TruncatedSeries2 zero_like(const ZElement& u) {
    return TruncatedSeries2(u.p.order());
}
}  // namespace

ZElement make_element(std::vector<TruncatedSeries2> coeffs,
                      TruncatedSeries2 p, TruncatedSeries2 q) {
    ZElement u{std::move(coeffs), std::move(p), std::move(q)};
    check_element(u);
    return u;
}

ZElement reduce(const ZElement& u) {
    check_element(u);
    std::vector<TruncatedSeries2> c = u.coeffs;
    while (c.size() < 3) c.push_back(zero_like(u));
    for (size_t k = c.size() - 1; k >= 3; --k) {
        c[k - 2] += u.p * c[k];
        c[k - 3] += u.q * c[k];
    }
    c.resize(3, zero_like(u));
    return ZElement{std::move(c), u.p, u.q};
}

ZElement zmul(const ZElement& u, const ZElement& v) {
    check_element(u);
    check_element(v);
    if (u.p.order() != v.p.order())
        throw ConfigError("ring element order mismatch");
    std::vector<TruncatedSeries2> prod(u.coeffs.size() + v.coeffs.size() - 1,
                                       zero_like(u));
    for (size_t i = 0; i < u.coeffs.size(); ++i) {
        if (u.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < v.coeffs.size(); ++j)
            prod[i + j] += u.coeffs[i] * v.coeffs[j];
    }
    return reduce(ZElement{std::move(prod), u.p, u.q});
}

RingDivision divide_by_critical(const ZElement& u) {
    check_element(u);
    std::vector<TruncatedSeries2> num = u.coeffs;
    while (num.size() < 2) num.push_back(zero_like(u));
    RingDivision out;
    Coeff third = Coeff(1) / 3;
    if (num.size() >= 3) {
        out.quotient.assign(num.size() - 2, zero_like(u));
        for (size_t k = num.size() - 1; k >= 2; --k) {
            out.quotient[k - 2] = num[k] * third;
            num[k - 2] += u.p * out.quotient[k - 2];
        }
    }
    out.rem0 = num[0];
    out.rem1 = num[1];
    return out;
}

ZElement primitive_q(const ZElement& u) {
    check_element(u);
    size_t n = u.coeffs.size();
    std::vector<TruncatedSeries2> w(n + 3, zero_like(u));
    for (size_t j = 1; j < n + 3; ++j) {
        TruncatedSeries2 t = zero_like(u);
        if (j - 1 < n) t -= u.p * u.coeffs[j - 1];
        if (j >= 3 && j - 3 < n) t += Coeff(3) * u.coeffs[j - 3];
        w[j] = (Coeff(1) / static_cast<int>(j)) * t;
    }
    return ZElement{std::move(w), u.p, u.q};
}

ZElement diff_q(const ZElement& u, const Real* tol) {
    check_element(u);
    size_t n = u.coeffs.size();
    std::vector<TruncatedSeries2> jnum;
    for (size_t k = 1; k < n; ++k)
        jnum.push_back(static_cast<int>(k) * Coeff(1) * u.coeffs[k]);
    if (jnum.empty()) jnum.push_back(zero_like(u));
    RingDivision div = divide_by_critical(ZElement{std::move(jnum), u.p, u.q});
    Real rem = std::max(div.rem0.max_abs_coeff(), div.rem1.max_abs_coeff());
    Real bound = tol ? *tol : pow10(-static_cast<int>(precision()) + 8);
    if (rem > bound)
        throw NumericError("element is not q-differentiable in the ring "
                           "(chain numerator not divisible by 3z^2 - p)", rem);
    std::vector<TruncatedSeries2> out;
    out.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        TruncatedSeries2 c = u.coeffs[k].diff_x();
        if (k < div.quotient.size()) c += div.quotient[k];
        out.push_back(std::move(c));
    }
    return ZElement{std::move(out), u.p, u.q};
}

ZElement diff_p_of_primitive(const ZElement& a) {
    check_element(a);
    size_t n = a.coeffs.size();
    std::vector<TruncatedSeries2> out(n + 3, zero_like(a));
    for (size_t j = 1; j < n + 3; ++j) {
        TruncatedSeries2 t = zero_like(a);
        if (j - 1 < n) {
            t -= a.coeffs[j - 1];
            t -= a.p * a.coeffs[j - 1].diff_t();
        }
        if (j >= 3 && j - 3 < n) t += Coeff(3) * a.coeffs[j - 3].diff_t();
        out[j] = (Coeff(1) / static_cast<int>(j)) * t;
    }
    for (size_t k = 0; k < n; ++k)
        out[k + 1] += a.coeffs[k];
    return ZElement{std::move(out), a.p, a.q};
}

Coeff eval_element(const ZElement& u, const Coeff& p0, const Coeff& q0,
                   const Coeff& z0) {
    Coeff acc(0), zp(1);
    for (const auto& c : u.coeffs) {
        acc += c.eval(p0, q0) * zp;
        zp *= z0;
    }
    return acc;
}

Real max_abs_coeff(const ZElement& u) {
    Real best(0);
    for (const auto& c : u.coeffs)
        best = std::max(best, c.max_abs_coeff());
    return best;
}

Coeff discriminant(const Coeff& p0, const Coeff& q0) {
    return Coeff(4) * p0 * p0 * p0 - Coeff(27) * q0 * q0;
}

std::array<Coeff, 3> cubic_roots(const Coeff& p0, const Coeff& q0) {
    using C = std::complex<double>;
    C p(static_cast<double>(p0.real()), static_cast<double>(p0.imag()));
    C q(static_cast<double>(q0.real()), static_cast<double>(q0.imag()));

    // Cardano for z^3 - p z - q = 0 in double, then Newton at full precision.
    std::array<C, 3> seeds;
    if (std::abs(p) == 0.0 && std::abs(q) == 0.0) {
        seeds = {C(0), C(0), C(0)};
    } else {
        C d = std::sqrt(q * q / 4.0 - p * p * p / 27.0);
        C u3 = q / 2.0 + d;
        if (std::abs(u3) < 1e-30) u3 = q / 2.0 - d;
        C u = std::pow(u3, 1.0 / 3.0);
        C w(-0.5, std::sqrt(3.0) / 2.0);
        for (int k = 0; k < 3; ++k) {
            C uk = u * (k == 0 ? C(1) : (k == 1 ? w : w * w));
            seeds[k] = uk + p / (3.0 * uk);
        }
    }

    std::array<Coeff, 3> roots;
    for (int k = 0; k < 3; ++k) {
        Coeff z(Real(seeds[k].real()), Real(seeds[k].imag()));
        for (int it = 0; it < 64; ++it) {
            Coeff f = z * z * z - p0 * z - q0;
            Coeff fp = Coeff(3) * z * z - p0;
            if (coeff_abs(fp) == 0) break;
            Coeff dz = f / fp;
            z -= dz;
            if (coeff_abs(dz) <= pow10(-static_cast<int>(precision()) - 2) *
                                     (Real(1) + coeff_abs(z)))
                break;
        }
        roots[k] = z;
    }
    std::sort(roots.begin(), roots.end(), [](const Coeff& a, const Coeff& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace cusp
