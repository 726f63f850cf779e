#include "realdiv/periods.hpp"

#include <cmath>
#include <cstdlib>
#include <future>

#include "realdiv/linalg.hpp"

namespace realdiv {

namespace {

// REALDIVISOR_THREADS caps how many of the independent period integrals run
// concurrently; the merge order is fixed, so results are deterministic.
int thread_cap() {
    const char* env = std::getenv("REALDIVISOR_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

PeriodResiduals validate(const Eigen::MatrixXi& M, Eigen::MatrixXd& T) {
    PeriodResiduals res;
    res.symmetry_defect = (T - T.transpose()).cwiseAbs().maxCoeff();
    if (res.symmetry_defect > 1e-10 * std::max(1.0, T.cwiseAbs().maxCoeff()))
        throw PeriodError("periods: T fails the symmetry residual");
    T = ((T + T.transpose()) / 2.0).eval();
    if ((M - M.transpose()).cwiseAbs().maxCoeff() != 0)
        throw PeriodError("periods: reflection matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    res.min_eigenvalue_T = es.eigenvalues().minCoeff();
    if (!(res.min_eigenvalue_T > 0.0))
        throw PeriodError("periods: T is not positive definite");
    res.integrality_defect = 0.0;  // M is exact by construction
    return res;
}

}  // namespace

ComessattiPeriods periods_family_a(const RealHyperellipticCurve& curve, const QuadratureSpec& spec,
                                   FamilyAPeriodData* data) {
    if (curve.family() != CurveFamily::family_a)
        throw PeriodError("periods_family_a: wrong curve family");
    const double c1 = curve.params()[0], c2 = curve.params()[1], c3 = curve.params()[2];

    // f(-t) = (c1 - t)(c2 - t)(c3 - t) is negative on (c1, c2), positive on
    // (c2, c3); the four period integrals carry |f(-t)| and split off the
    // inverse-square-root endpoint factors.
    auto interval_integral = [&](double lo, double hi, bool weight_t) {
        SingularIntegrand f;
        f.a = lo;
        f.b = hi;
        f.pattern = SingularityPattern::inv_sqrt_both;
        f.smooth_part = [&, lo, hi, weight_t](double t) {
            // |f(-t)| / ((t - lo)(hi - t)) equals the remaining linear factor
            const double rest = (lo == c1) ? (c3 - t) : (t - c1);
            const double den = weight_t ? t * rest : rest;
            return 1.0 / std::sqrt(den);
        };
        return integrate(f, spec);
    };

    FamilyAPeriodData d;
    if (thread_cap() > 1) {
        auto fa1 = std::async(std::launch::async, interval_integral, c1, c2, true);
        auto fb1 = std::async(std::launch::async, interval_integral, c2, c3, true);
        auto fa2 = std::async(std::launch::async, interval_integral, c1, c2, false);
        d.B2 = interval_integral(c2, c3, false);
        d.A1 = fa1.get();
        d.B1 = fb1.get();
        d.A2 = fa2.get();
    } else {
        d.A1 = interval_integral(c1, c2, true);
        d.B1 = interval_integral(c2, c3, true);
        d.A2 = interval_integral(c1, c2, false);
        d.B2 = interval_integral(c2, c3, false);
    }
    // a-period normalization matching the printed quarter-point and length
    // prefactors for this family (see the orthonormal frame consumers).
    d.a_period_1 = 8.0 * d.A1;
    d.a_period_2 = 8.0 * d.B2;

    ComessattiPeriods p;
    p.g = 2;
    p.M = Eigen::MatrixXi::Zero(2, 2);
    p.M(0, 1) = p.M(1, 0) = 1;
    p.T = Eigen::MatrixXd::Zero(2, 2);
    p.T(0, 0) = d.B1 / (2.0 * d.A1);
    p.T(1, 1) = d.A2 / (2.0 * d.B2);
    p.residuals = validate(p.M, p.T);
    if (data) *data = d;
    return p;
}

ComessattiPeriods periods_m_curve(const RealHyperellipticCurve& curve, const QuadratureSpec& spec,
                                  MCurvePeriodData* data) {
    if (curve.family() != CurveFamily::m_curve)
        throw PeriodError("periods_m_curve: wrong curve family");
    const auto& r = curve.params();
    const int g = curve.genus();
    const int n = 2 * g + 2;

    // Doubled arc of x^j dx / sqrt(sign * p) over (a, b), both simple roots of p.
    auto doubled_arc = [&](double a, double b, int j, double sign) {
        SingularIntegrand f;
        f.a = a;
        f.b = b;
        f.pattern = SingularityPattern::inv_sqrt_both;
        f.smooth_part = [&, a, b, j, sign](double x) {
            double rest = sign;
            for (int i = 0; i < n; ++i) {
                if (r[static_cast<size_t>(i)] == a || r[static_cast<size_t>(i)] == b) continue;
                rest *= (x - r[static_cast<size_t>(i)]);
            }
            // sign * p(x) = rest * (x - a)(b - x) * (-1): (x-a)(x-b) = -(x-a)(b-x)
            rest = -rest;
            if (!(rest > 0.0)) throw PeriodError("periods_m_curve: sign pattern violated");
            return std::pow(x, j) / std::sqrt(rest);
        };
        return 2.0 * integrate(f, spec);
    };

    // a-cycles: the g bounded ovals [r_{2k-1}, r_{2k}] (0-based: r[2k-1], r[2k]).
    Eigen::MatrixXd A(g, g), Bim(g, g);
    for (int k = 0; k < g; ++k) {
        const double lo = r[static_cast<size_t>(2 * k + 1)];
        const double hi = r[static_cast<size_t>(2 * k + 2)];
        for (int j = 0; j < g; ++j) A(j, k) = doubled_arc(lo, hi, j, +1.0);
    }
    // Imaginary ovals over the first g gaps where p < 0.
    for (int k = 0; k < g; ++k) {
        const double lo = r[static_cast<size_t>(2 * k)];
        const double hi = r[static_cast<size_t>(2 * k + 1)];
        for (int j = 0; j < g; ++j) Bim(j, k) = doubled_arc(lo, hi, j, -1.0);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const double cond = svd.singularValues()(0) / svd.singularValues()(g - 1);
    if (!(cond < 1e12))
        throw PeriodError("periods_m_curve: a-period matrix is ill-conditioned");

    // b-cycles are alternating sums of the imaginary ovals, b_k = sum_{i<=k}
    // (-1)^{k-i} I_i; this is the unique combination meeting each bounded oval
    // exactly once, and it makes Im(A^{-1} B) symmetric.
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(g, g);
    for (int i = 0; i < g; ++i)
        for (int k = i; k < g; ++k) V(i, k) = ((k - i) % 2 == 0) ? 1.0 : -1.0;

    Eigen::MatrixXd T = A.partialPivLu().solve(Bim) * V;
    double sign = 1.0;
    if (T.trace() < 0.0) {
        sign = -1.0;
        T = -T;
    }

    ComessattiPeriods p;
    p.g = g;
    p.M = Eigen::MatrixXi::Zero(g, g);
    p.T = T;
    p.residuals = validate(p.M, p.T);
    if (data) {
        data->A = A;
        data->B_im = sign * Bim;
        data->sign = sign;
    }
    return p;
}

ComessattiPeriods compute_periods(const RealHyperellipticCurve& curve,
                                  const QuadratureSpec& spec) {
    return curve.family() == CurveFamily::family_a ? periods_family_a(curve, spec)
                                                   : periods_m_curve(curve, spec);
}

Eigen::MatrixXi reflection_normal_form(int g_tilde, int r, int m, BaseLoop base) {
    if (g_tilde < 0 || r < 0 || m < 0)
        throw DomainError("reflection_normal_form: negative signature entry");
    if (base == BaseLoop::S_r && r < 1)
        throw DomainError("reflection_normal_form: base loop S_r needs r >= 1");
    if (base == BaseLoop::R_m && m < 1)
        throw DomainError("reflection_normal_form: base loop R_m needs m >= 1");
    const int g = 2 * g_tilde + m + r - 1;
    if (g < 1) throw DomainError("reflection_normal_form: genus must be at least 1");

    Eigen::MatrixXi M = Eigen::MatrixXi::Zero(g, g);
    for (int i = 0; i < 2 * g_tilde; ++i) M(i, 2 * g_tilde - 1 - i) = 1;  // J block

    if (base == BaseLoop::S_r) {
        // diag(J_{2g~}, I_m, 0_{r-1})
        for (int i = 0; i < m; ++i) M(2 * g_tilde + i, 2 * g_tilde + i) = 1;
    } else {
        // diag(J_{2g~}, 1 - I on (m-1), 1 on r) with all-ones off blocks
        const int mm = m - 1;
        const int off = 2 * g_tilde;
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < mm; ++j) M(off + i, off + j) = (i == j) ? 0 : 1;
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < r; ++j) {
                M(off + i, off + mm + j) = 1;
                M(off + mm + j, off + i) = 1;
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) M(off + mm + i, off + mm + j) = 1;
    }
    return M;
}

}  // namespace realdiv
