#include "cusp/burgers.hpp"

#include <algorithm>
#include <map>

namespace cusp {

namespace {
using XSlice = std::map<unsigned, Coeff>;  // x-exponent -> coefficient

XSlice& add_to(XSlice& a, const XSlice& b, const Coeff& scale) {
    for (const auto& [m, c] : b) {
        auto [it, fresh] = a.try_emplace(m, Coeff(0));
        it->second += scale * c;
        (void)fresh;
    }
    return a;
}

XSlice mul_slices(const XSlice& a, const XSlice& b, unsigned max_x) {
    XSlice out;
    for (const auto& [i, u] : a)
        for (const auto& [j, v] : b) {
            if (i + j > max_x) continue;
            auto [it, fresh] = out.try_emplace(i + j, Coeff(0));
            it->second += u * v;
            (void)fresh;
        }
    return out;
}

XSlice dx_slice(const XSlice& a) {
    XSlice out;
    for (const auto& [m, c] : a)
        if (m > 0) out[m - 1] = c * static_cast<int>(m);
    return out;
}
}  // namespace

CKState ck_solve(const TruncatedSeries2& a0, unsigned order) {
    unsigned M = order;
    if (a0.order() != M)
        throw ConfigError("initial datum order mismatch");
    for (const auto& [key, c] : a0.terms())
        if ((key >> 8) != 0)
            throw ConfigError("initial datum must depend on x only");

    std::vector<XSlice> a(M), p(M), q(M);
    for (const auto& [key, c] : a0.terms())
        a[0][key & 0xff] = c;
    q[0][1] = Coeff(1);

    for (unsigned d = 0; d + 1 < M; ++d) {
        unsigned max_x = M - 2 - d;
        XSlice qr, pr, ar;
        for (unsigned i = 0; i <= d; ++i) {
            add_to(qr, mul_slices(a[i], dx_slice(q[d - i]), max_x), Coeff(1));
            add_to(qr, mul_slices(p[i], dx_slice(p[d - i]), max_x),
                   Coeff(1) / 3);
            add_to(pr, mul_slices(a[i], dx_slice(p[d - i]), max_x), Coeff(1));
        }
        add_to(pr, dx_slice(q[d]), Coeff(1));
        ar = dx_slice(p[d]);
        Coeff inv = Coeff(1) / static_cast<int>(d + 1);
        for (auto& [m, c] : qr) q[d + 1][m] = c * inv;
        for (auto& [m, c] : pr) p[d + 1][m] = c * inv;
        for (auto& [m, c] : ar) a[d + 1][m] = c * inv / 3;
    }

    auto pack = [&](const std::vector<XSlice>& slices) {
        TruncatedSeries2 s(M);
        for (unsigned d = 0; d < M; ++d)
            for (const auto& [m, c] : slices[d])
                if (d + m < M) s.set_coeff(d, m, c);
        return s;
    };
    return CKState{pack(a), pack(p), pack(q)};
}

Real system_residual(const CKState& st) {
    unsigned M = st.a.order();
    TruncatedSeries2 ax = st.a.diff_x(), px = st.p.diff_x(), qx = st.q.diff_x();
    Coeff third = Coeff(1) / 3;
    TruncatedSeries2 e1 = st.q.diff_t() - st.a * qx - third * (st.p * px);
    TruncatedSeries2 e2 = st.p.diff_t() - st.a * px - qx;
    TruncatedSeries2 e3 = st.a.diff_t() - third * px;
    Real best(0);
    for (const auto* e : {&e1, &e2, &e3})
        best = std::max(best, e->truncated(M - 1).max_abs_coeff());
    return best;
}

Real burgers_residual(const CKState& st) {
    unsigned M = st.a.order();
    TruncatedSeries2 at = st.a.diff_t(), ax = st.a.diff_x();
    TruncatedSeries2 pt = st.p.diff_t(), px = st.p.diff_x();
    TruncatedSeries2 qt = st.q.diff_t(), qx = st.q.diff_x();
    Coeff third = Coeff(1) / 3;
    TruncatedSeries2 i0 = -(st.p * at) + qt + st.a * (st.p * ax) - st.a * qx;
    TruncatedSeries2 i1 = pt + st.p * ax - st.a * px - qx;
    TruncatedSeries2 i2 = at - st.a * ax - third * px;
    TruncatedSeries2 i3 = Coeff(3) * ax;
    Real best(0);
    for (const auto* e : {&i0, &i1, &i2, &i3})
        best = std::max(best, e->truncated(M - 1).max_abs_coeff());
    return best;
}

namespace {
// Newton for z^3 = p z + q from a predictor; true if converged in <= 8 steps.
bool newton_root(const Coeff& p, const Coeff& q, Coeff& z) {
    Real tol = pow10(-static_cast<int>(precision()) + 5);
    for (int it = 0; it < 8; ++it) {
        Coeff f = z * z * z - p * z - q;
        Coeff fp = Coeff(3) * z * z - p;
        if (coeff_abs(fp) == 0) return false;
        Coeff dz = f / fp;
        z -= dz;
        if (coeff_abs(dz) <= tol * (Real(1) + coeff_abs(z)))
            return true;
    }
    return false;
}

void guard_discriminant(const Coeff& p, const Coeff& q) {
    Real d = coeff_abs(discriminant(p, q));
    if (d < Real(1) / 100000000)
        throw NumericError("path too close to the discriminant locus", d);
}

Coeff track_segment(const Coeff& p0, const Coeff& q0, const Coeff& z0,
                    const Coeff& p1, const Coeff& q1, int depth) {
    guard_discriminant(p1, q1);
    Coeff z = z0;
    if (newton_root(p1, q1, z))
        return z;
    if (depth > 48)
        throw NumericError("root continuation failed to refine");
    Coeff pm = (p0 + p1) / 2, qm = (q0 + q1) / 2;
    Coeff zm = track_segment(p0, q0, z0, pm, qm, depth + 1);
    return track_segment(pm, qm, zm, p1, q1, depth + 1);
}
}  // namespace

Coeff continue_root(const PathPQ& path, const Coeff& z0) {
    if (path.points.size() < 2)
        throw ConfigError("path needs at least two points");
    guard_discriminant(path.points[0].first, path.points[0].second);
    Coeff z = z0;
    if (!newton_root(path.points[0].first, path.points[0].second, z))
        throw NumericError("starting value is not a root at the base point");
    for (size_t i = 0; i + 1 < path.points.size(); ++i)
        z = track_segment(path.points[i].first, path.points[i].second, z,
                          path.points[i + 1].first, path.points[i + 1].second, 0);
    return z;
}

std::array<int, 3> monodromy(const PathPQ& loop) {
    if (loop.points.size() < 2)
        throw ConfigError("loop needs at least two points");
    const auto& [pa, qa] = loop.points.front();
    const auto& [pb, qb] = loop.points.back();
    if (coeff_abs(pa - pb) + coeff_abs(qa - qb) > pow10(-12))
        throw ConfigError("loop is not closed");
    std::array<Coeff, 3> base = cubic_roots(pa, qa);
    std::array<int, 3> perm{-1, -1, -1};
    for (int i = 0; i < 3; ++i) {
        Coeff zf = continue_root(loop, base[i]);
        int best = 0;
        Real bd = coeff_abs(zf - base[0]);
        for (int j = 1; j < 3; ++j) {
            Real dj = coeff_abs(zf - base[j]);
            if (dj < bd) {
                bd = dj;
                best = j;
            }
        }
        perm[i] = best;
    }
    std::array<bool, 3> seen{false, false, false};
    for (int i : perm) {
        if (seen[i])
            throw NumericError("root matching after transport is not a bijection");
        seen[i] = true;
    }
    return perm;
}

ContactPoint contact_flow(const Real& x, const Real& s) {
    if (!(x > 0))
        throw ConfigError("contact flow needs x > 0");
    Real c = pow(x, Real(1) / 3);          // x^(1/3)
    Real denom = Real(3) * c * c - s;      // 3 x^(2/3) - s
    if (abs(denom) <= pow10(-static_cast<int>(precision()) + 5))
        throw NumericError("contact flow hit the caustic time", abs(denom));
    ContactPoint out;
    out.t = s;
    out.y = x - c * s;
    out.u = c;
    out.tau = c / denom;
    out.xi = Real(1) / denom;
    return out;
}

ShockTimes shock_times(const Real& x0, const Real& x1) {
    if (!(Real(0) < x0 && x0 < x1))
        throw ConfigError("shock times need 0 < x0 < x1");
    Real r0 = sqrt(x0), r1 = sqrt(x1);
    return ShockTimes{Real(2) * r0, r0 + r1};
}

Real shock_delta(const Real& t, const Real& x) {
    if (!(x > 0))
        throw ConfigError("delta needs x > 0");
    return x - sqrt(x) * t + t * t / 4;
}

std::pair<Real, Real> branch_values(const Real& t, const Real& x0) {
    Real d = shock_delta(t, x0);
    if (d < 0)
        throw NumericError("branch values undefined: negative discriminant", -d);
    Real s = sqrt(d);
    return {t / 2 + s, t / 2 - s};
}

std::vector<std::vector<Coeff>> companion_matrix(unsigned m, const Coeff& v1) {
    if (m < 2)
        throw ConfigError("reduction order must be at least 2");
    std::vector<std::vector<Coeff>> A(m, std::vector<Coeff>(m, Coeff(0)));
    for (unsigned i = 0; i + 1 < m; ++i)
        A[i][i + 1] = Coeff(1);
    A[m - 1][0] = v1;
    return A;
}

std::vector<CharField> characteristic_fields(unsigned m, const Coeff& v1) {
    if (m < 2)
        throw ConfigError("reduction order must be at least 2");
    if (coeff_abs(v1) == 0)
        throw ConfigError("characteristic fields need v1 != 0");
    Coeff r = exp(log(v1) / static_cast<int>(m));
    Real pi = acos(Real(-1));
    std::vector<CharField> out;
    out.reserve(m);
    for (unsigned k = 0; k < m; ++k) {
        Real angle = Real(2) * pi * static_cast<int>(k) / static_cast<int>(m);
        Coeff rot(cos(angle), sin(angle));
        CharField f;
        f.lambda = r * rot;
        f.omega.resize(m);
        f.omega[0] = Coeff(1);
        for (unsigned i = 1; i < m; ++i)
            f.omega[i] = f.omega[i - 1] * f.lambda;
        f.pairing = f.lambda / (static_cast<int>(m) * v1);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace cusp
