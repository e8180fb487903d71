#include "cusp/fixedpoint.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

namespace cusp {

namespace {

using TS2 = TruncatedSeries2;

Coeff frac(int num, int den) { return Coeff(num) / den; }

TS2 slice_t0(const TS2& s) {
    TS2 out(s.order());
    for (const auto& [key, c] : s.terms())
        if ((key >> 8) == 0) out.set_coeff(0, key & 0xff, c);
    return out;
}

struct Derivs {
    TS2 pt, px, qt, qx, ptt, pxx, qtt, qxx, pt2, px2, qx2, pxqx;
    std::vector<TS2> p3pow;
};

Derivs make_derivs(const SolutionData& d, size_t max_pow) {
    Derivs D;
    D.pt = d.p.diff_t();
    D.px = d.p.diff_x();
    D.qt = d.q.diff_t();
    D.qx = d.q.diff_x();
    D.ptt = D.pt.diff_t();
    D.pxx = D.px.diff_x();
    D.qtt = D.qt.diff_t();
    D.qxx = D.qx.diff_x();
    D.pt2 = D.pt * D.pt;
    D.px2 = D.px * D.px;
    D.qx2 = D.qx * D.qx;
    D.pxqx = D.px * D.qx;
    TS2 p3 = frac(1, 3) * d.p;
    D.p3pow.push_back(TS2::constant(Coeff(1), d.p.order()));
    for (size_t k = 1; k <= max_pow; ++k)
        D.p3pow.push_back(D.p3pow.back() * p3);
    return D;
}

// u_x ring bracket, u_xx singular bracket, and their convolution.
struct BracketSet {
    std::vector<TS2> first, secondX, S;
};

BracketSet build_brackets(const SolutionData& d, const Derivs& D) {
    size_t N = d.b.size();
    unsigned M = d.p.order();
    TS2 zero(M);
    auto b = [&](long k) -> const TS2& {
        return (k >= 0 && k < static_cast<long>(N)) ? d.b[k] : zero;
    };

    BracketSet br;
    br.first.reserve(N);
    for (size_t j = 0; j < N; ++j) {
        TS2 t = D.qx * d.b[j];
        if (j >= 1) {
            t += frac(static_cast<int>(j) - 1, static_cast<int>(j)) * (D.px * d.b[j - 1]);
            t -= frac(1, static_cast<int>(j)) * (d.p * d.b[j - 1].diff_x());
        }
        if (j >= 3)
            t += frac(3, static_cast<int>(j)) * d.b[j - 3].diff_x();
        br.first.push_back(std::move(t));
    }

    br.secondX.reserve(N);
    for (size_t i = 0; i < N; ++i) {
        TS2 t = Coeff(static_cast<int>(i) + 1) * (D.qx2 * b(static_cast<long>(i) + 1));
        t += Coeff(2 * static_cast<int>(i)) * (D.pxqx * d.b[i]);
        if (i >= 1)
            t += Coeff(static_cast<int>(i) - 1) * (D.px2 * d.b[i - 1]);
        br.secondX.push_back(std::move(t));
    }

    br.S.reserve(N - 1);
    for (size_t k = 0; k + 1 < N; ++k) {
        TS2 acc(M);
        for (size_t j = 0; j <= k; ++j) {
            if (br.first[j].is_zero() || br.secondX[k - j].is_zero()) continue;
            acc += br.first[j] * br.secondX[k - j];
        }
        br.S.push_back(std::move(acc));
    }
    return br;
}

// u_xx ring bracket; `curvature` is p_tt (standard) or p_xx (exact).
std::vector<TS2> build_secondb(const SolutionData& d, const Derivs& D,
                               const TS2& curvature) {
    size_t N = d.b.size();
    std::vector<TS2> sb;
    sb.reserve(N);
    for (size_t i = 0; i < N; ++i) {
        TS2 t = d.b[i] * D.qxx + Coeff(2) * (d.b[i].diff_x() * D.qx);
        if (i >= 1) {
            int ii = static_cast<int>(i);
            t += frac(2 * ii - 2, ii) * (d.b[i - 1].diff_x() * D.px);
            t += frac(ii - 1, ii) * (d.b[i - 1] * curvature);
            t -= frac(1, ii) * (d.p * d.b[i - 1].diff_x().diff_x());
        }
        if (i >= 3)
            t += frac(3, static_cast<int>(i)) * d.b[i - 3].diff_x().diff_x();
        sb.push_back(std::move(t));
    }
    return sb;
}

struct Stage1 {
    Derivs D;
    BracketSet br;
    TS2 Pt, Qt, P, Q;
};

Stage1 stage1(const SolutionData& d, const FixedPointConfig& cfg) {
    size_t N = d.b.size();
    unsigned M = cfg.order;
    if (N < 5)
        throw ConfigError("need at least five coefficient components");
    if (d.p.order() != M || d.q.order() != M)
        throw ConfigError("data order does not match configuration");
    for (const auto& bb : d.b)
        if (bb.order() != M)
            throw ConfigError("data order does not match configuration");

    Stage1 st;
    st.D = make_derivs(d, (N - 1) / 2);
    st.br = build_brackets(d, st.D);
    const Derivs& D = st.D;
    TS2 zero(M);
    auto b = [&](long k) -> const TS2& {
        return (k >= 0 && k < static_cast<long>(N)) ? d.b[k] : zero;
    };

    size_t K = (N - 1) / 2;  // = ceil((N-2)/2)
    std::vector<TS2> B;
    B.reserve(K + 1);
    for (size_t k = 0; k <= K; ++k) {
        TS2 t = st.br.S[k];
        if (k >= 1)
            t -= Coeff(static_cast<int>(k) - 1) * (D.pt2 * d.b[k - 1]);
        B.push_back(std::move(t));
    }

    auto psum = [&](size_t bound, auto term) {
        TS2 acc(M);
        for (size_t k = 0; k <= bound; ++k)
            acc += D.p3pow[k] * term(k);
        return acc;
    };

    TS2 M11 = Coeff(4) * psum((N - 1) / 2, [&](size_t k) {
        return Coeff(static_cast<int>(k)) * (D.qt * b(2 * k));
    });
    TS2 M12 = psum((N - 2) / 2, [&](size_t k) {
        return Coeff(2 * static_cast<int>(k) + 1) * (D.qt * b(2 * k + 1));
    });
    TS2 M21 = Coeff(2) * M12;
    TS2 M22 = Coeff(2) * psum((N - 3) / 2, [&](size_t k) {
        return Coeff(static_cast<int>(k) + 1) * (D.qt * b(2 * k + 2));
    });
    TS2 rhs1 = psum(K / 2, [&](size_t k) { return B[2 * k]; });
    TS2 rhs2 = psum((K - 1) / 2, [&](size_t k) { return B[2 * k + 1]; });

    TS2 det = M11 * M22 - M12 * M21;
    TS2 dinv;
    try {
        dinv = det.reciprocal();
    } catch (const NumericError& e) {
        throw NumericError("eikonal matrix singular at the origin", e.residual);
    }
    st.Pt = (M22 * rhs1 - M12 * rhs2) * dinv;
    st.Qt = (M11 * rhs2 - M21 * rhs1) * dinv;
    st.P = st.Pt.integrate_t(zero);
    st.Q = st.Qt.integrate_t(TS2::var_x(M));
    return st;
}

}  // namespace

EikonalStep eikonal_step(const SolutionData& d, const FixedPointConfig& cfg) {
    Stage1 st = stage1(d, cfg);
    return EikonalStep{std::move(st.Pt), std::move(st.Qt)};
}

SolutionData map_F(const SolutionData& d, const FixedPointConfig& cfg) {
    size_t N = d.b.size();
    unsigned M = cfg.order;
    Stage1 st = stage1(d, cfg);
    const Derivs& D = st.D;
    TS2 zero(M);
    auto b = [&](long k) -> const TS2& {
        return (k >= 0 && k < static_cast<long>(N)) ? d.b[k] : zero;
    };

    std::vector<TS2> A;
    A.reserve(N - 1);
    TS2 Ptqt = st.Pt * D.qt;
    TS2 Qtqt = st.Qt * D.qt;
    for (size_t k = 0; k + 1 < N; ++k) {
        TS2 t = -st.br.S[k];
        if (k >= 1)
            t += Coeff(static_cast<int>(k) - 1) * (D.pt2 * d.b[k - 1]);
        t += Coeff(2 * static_cast<int>(k)) * (Ptqt * d.b[k]);
        t += Coeff(static_cast<int>(k) + 1) * (Qtqt * b(static_cast<long>(k) + 1));
        A.push_back(std::move(t));
    }

    std::vector<TS2> C;
    C.reserve(N - 3);
    for (size_t k = 0; k + 3 < N; ++k) {
        TS2 acc(M);
        for (size_t l = 0; 2 * l + k + 4 <= N; ++l)
            acc += D.p3pow[l] * A[k + 2 + 2 * l];
        C.push_back(std::move(acc));
    }

    std::vector<TS2> sb =
        build_secondb(d, D, cfg.mode == UpdateMode::standard ? D.ptt : D.pxx);
    Coeff cfac = cfg.mode == UpdateMode::standard ? Coeff(1) : frac(1, 3);
    TS2 r2qt;
    try {
        r2qt = (Coeff(2) * D.qt).reciprocal();
    } catch (const NumericError& e) {
        throw NumericError("transport coefficient q_t degenerate at the origin",
                           e.residual);
    }

    SolutionData out;
    out.p = std::move(st.P);
    out.q = std::move(st.Q);
    out.root_choice = d.root_choice;
    out.b.reserve(N - 3);
    for (size_t k = 0; k + 3 < N; ++k) {
        TS2 T(M);
        for (size_t j = 0; j <= k; ++j) {
            if (st.br.first[j].is_zero() || sb[k - j].is_zero()) continue;
            T += st.br.first[j] * sb[k - j];
        }
        TS2 rhs = T - cfac * C[k];
        rhs -= d.b[k] * D.qtt;
        if (k >= 1) {
            int kk = static_cast<int>(k);
            rhs -= frac(2 * kk - 2, kk) * (d.b[k - 1].diff_t() * D.pt);
            rhs -= frac(kk - 1, kk) * (d.b[k - 1] * D.ptt);
            rhs += frac(1, kk) * (d.p * d.b[k - 1].diff_t().diff_t());
        }
        if (k >= 3)
            rhs -= frac(3, static_cast<int>(k)) * d.b[k - 3].diff_t().diff_t();
        rhs = rhs * r2qt;
        out.b.push_back(rhs.integrate_t(slice_t0(d.b[k])));
    }
    return out;
}

SolutionData datum_to_initial(const CauchyDatum& d, unsigned order,
                              unsigned data_length) {
    if (d.cs.size() < 2)
        throw ConfigError("datum needs at least two coefficients");
    if (coeff_abs(d.cs[0]) == 0 || coeff_abs(d.cs[1]) == 0)
        throw ConfigError(
            "datum requires nonzero leading coefficients: the eikonal "
            "matrix M would be singular at the origin");
    if (data_length < d.cs.size())
        throw ConfigError("data length shorter than the datum");
    SolutionData out;
    out.p = TruncatedSeries2(order);
    out.q = TruncatedSeries2::var_x(order);
    out.b.assign(data_length, TruncatedSeries2(order));
    for (size_t k = 0; k < d.cs.size(); ++k)
        out.b[k] = TruncatedSeries2::constant(
            frac(static_cast<int>(k) + 3, 3) * d.cs[k], order);
    return out;
}

IterateResult iterate(const SolutionData& d0, const FixedPointConfig& cfg) {
    set_precision(cfg.digits);
    size_t N = d0.b.size();
    if (N != cfg.data_length)
        throw ConfigError("data length does not match configuration");
    if (N < 3 * static_cast<size_t>(cfg.iterations) + 5)
        throw ConfigError("data length too short: need at least 3*iterations + 5");

    size_t survivors = N - 3 * cfg.iterations;
    IterateResult res;
    res.data = d0;
    for (unsigned it = 1; it <= cfg.iterations; ++it) {
        auto start = std::chrono::steady_clock::now();
        SolutionData next;
        try {
            next = map_F(res.data, cfg);
        } catch (const NumericError& e) {
            throw NumericError(std::string(e.what()) + " (sweep " +
                                   std::to_string(it) + ")",
                               e.residual);
        }
        auto push = [&](const std::string& name, const TruncatedSeries2& a,
                        const TruncatedSeries2& bprev) {
            res.report.rows.push_back(
                {it, name, (a - bprev).sup_norm(cfg.probe, cfg.segment)});
        };
        push("p", next.p, res.data.p);
        push("q", next.q, res.data.q);
        for (size_t k = 0; k < survivors; ++k)
            push("b" + std::to_string(k), next.b[k], res.data.b[k]);
        res.data = std::move(next);
        res.report.runtimes_sec.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count());
    }
    res.report.residual_norm =
        residual(res.data, cfg.mode, cfg.probe, cfg.segment).norm;
    return res;
}

ZElement reconstruct_u(const SolutionData& d) {
    return primitive_q(make_element(d.b, d.p, d.q));
}

ResidualParts residual(const SolutionData& d, UpdateMode mode,
                       const Coeff& probe, const Segment& segment) {
    size_t N = d.b.size();
    if (N < 5)
        throw ConfigError("need at least five coefficient components");
    unsigned M = d.p.order();
    Derivs D = make_derivs(d, (N - 1) / 2);
    BracketSet br = build_brackets(d, D);
    TS2 zero(M);
    auto b = [&](long k) -> const TS2& {
        return (k >= 0 && k < static_cast<long>(N)) ? d.b[k] : zero;
    };

    // singular numerator: u_tt bracket minus the u_x*u_xx convolution
    TS2 ptqt = D.pt * D.qt;
    TS2 qt2 = D.qt * D.qt;
    std::vector<TS2> sing;
    sing.reserve(N - 1);
    for (size_t k = 0; k + 1 < N; ++k) {
        TS2 t = -br.S[k];
        if (k >= 1)
            t += Coeff(static_cast<int>(k) - 1) * (D.pt2 * d.b[k - 1]);
        t += Coeff(2 * static_cast<int>(k)) * (ptqt * d.b[k]);
        t += Coeff(static_cast<int>(k) + 1) * (qt2 * b(static_cast<long>(k) + 1));
        sing.push_back(std::move(t));
    }

    TS2 rem0(M), rem1(M);
    for (size_t l = 0; 2 * l < sing.size(); ++l)
        rem0 += D.p3pow[l] * sing[2 * l];
    for (size_t l = 0; 2 * l + 1 < sing.size(); ++l)
        rem1 += D.p3pow[l] * sing[2 * l + 1];

    std::vector<TS2> sb =
        build_secondb(d, D, mode == UpdateMode::standard ? D.ptt : D.pxx);
    Coeff cfac = mode == UpdateMode::standard ? Coeff(1) : frac(1, 3);

    std::vector<TS2> reg;
    reg.reserve(N - 3);
    for (size_t k = 0; k + 3 < N; ++k) {
        TS2 quot(M);
        for (size_t l = 0; 2 * l + k + 4 <= N; ++l)
            quot += D.p3pow[l] * sing[k + 2 + 2 * l];

        TS2 ringT = d.b[k] * D.qtt + Coeff(2) * (d.b[k].diff_t() * D.qt);
        if (k >= 1) {
            int kk = static_cast<int>(k);
            ringT += frac(2 * kk - 2, kk) * (d.b[k - 1].diff_t() * D.pt);
            ringT += frac(kk - 1, kk) * (d.b[k - 1] * D.ptt);
            ringT -= frac(1, kk) * (d.p * d.b[k - 1].diff_t().diff_t());
        }
        if (k >= 3)
            ringT += frac(3, static_cast<int>(k)) * d.b[k - 3].diff_t().diff_t();

        TS2 T(M);
        for (size_t j = 0; j <= k; ++j) {
            if (br.first[j].is_zero() || sb[k - j].is_zero()) continue;
            T += br.first[j] * sb[k - j];
        }
        reg.push_back(ringT - T + cfac * quot);
    }

    ResidualParts out{make_element(std::move(reg), d.p, d.q),
                      make_element(std::move(sing), d.p, d.q), Real(0)};
    out.norm = std::max(rem0.sup_norm(probe, segment),
                        rem1.sup_norm(probe, segment));
    for (const auto& c : out.regular.coeffs)
        out.norm = std::max(out.norm, c.sup_norm(probe, segment));
    return out;
}

Coeff eval_u(const SolutionData& d, const Coeff& t, const Coeff& x) {
    if (d.root_choice != 1 && d.root_choice != -1)
        throw ConfigError("root choice must be +1 or -1");
    ZElement u = reconstruct_u(d);
    Coeff p0 = d.p.eval(t, x);
    Coeff q0 = d.q.eval(t, x);
    // Normalize signed zeros so arg() of negative reals is +pi and the
    // branch target does not depend on how a zero component was produced.
    auto unsign = [](const Coeff& v) {
        return Coeff(v.real() == 0 ? Real(0) : v.real(),
                     v.imag() == 0 ? Real(0) : v.imag());
    };
    Coeff target(0);
    if (coeff_abs(q0) != 0)
        target = d.root_choice == 1 ? pow(unsign(q0), Coeff(1) / 3)
                                    : -pow(unsign(-q0), Coeff(1) / 3);
    auto roots = cubic_roots(p0, q0);
    Coeff z0 = roots[0];
    Real best = coeff_abs(roots[0] - target);
    for (int i = 1; i < 3; ++i) {
        Real di = coeff_abs(roots[i] - target);
        if (di < best) {
            best = di;
            z0 = roots[i];
        }
    }
    Coeff acc(0), zp(1);
    for (const auto& c : u.coeffs) {
        acc += c.eval(t, x) * zp;
        zp *= z0;
    }
    return acc;
}

}  // namespace cusp
