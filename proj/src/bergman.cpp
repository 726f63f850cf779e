#include "realdiv/bergman.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "realdiv/linalg.hpp"

namespace realdiv {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 7-point Gauss-Legendre rule on [-1, 1]; used per segment for the
// cumulative Abel-Jacobi integrals so the polyline samples and the running
// integral share one grid.
constexpr int kGaussN = 7;
constexpr double kGaussX[kGaussN] = {-0.9491079123427585, -0.7415311855993945,
                                     -0.4058451513773972, 0.0,
                                     0.4058451513773972,  0.7415311855993945,
                                     0.9491079123427585};
constexpr double kGaussW[kGaussN] = {0.1294849661688697, 0.2797053914892766,
                                     0.3818300505051189, 0.4179591836734694,
                                     0.3818300505051189, 0.2797053914892766,
                                     0.1294849661688697};

// Cumulative integral of a smooth vector integrand over a uniform grid on
// [lo, hi]: returns (n_points) x dim values, first row zero.
Eigen::MatrixXd cumulative(const std::function<void(double, Eigen::VectorXd&)>& integrand,
                           double lo, double hi, int n_points, int dim) {
    Eigen::MatrixXd out(n_points, dim);
    out.row(0).setZero();
    const double h = (hi - lo) / (n_points - 1);
    Eigen::VectorXd val(dim), acc(dim);
    for (int i = 1; i < n_points; ++i) {
        const double a = lo + (i - 1) * h;
        acc.setZero();
        for (int q = 0; q < kGaussN; ++q) {
            const double t = a + 0.5 * h * (1.0 + kGaussX[q]);
            integrand(t, val);
            acc += kGaussW[q] * val;
        }
        out.row(i) = out.row(i - 1) + (0.5 * h) * acc.transpose();
    }
    return out;
}

double dist_to_lattice(const Eigen::VectorXd& v) {
    double d = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double f = v(i) - std::round(v(i));
        d = std::max(d, std::fabs(f));
    }
    return d;
}

Eigen::MatrixXd mod_unit(const Eigen::MatrixXd& lift) {
    Eigen::MatrixXd m = lift;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= std::floor(m(i, j));
    return m;
}

// Family A: the product prod_j (c_j cos^2 s + sin^2 s) equals
// f(tan^2 s) cos^6 s, smooth and positive on the closed interval; every
// integrand along the real oval is expressed through it to avoid overflow
// at s = +-pi/2.
double family_a_fc(const RealHyperellipticCurve& curve, double s) {
    const double c = std::cos(s), ss = std::sin(s);
    double v = 1.0;
    for (double cj : curve.params()) v *= (cj * c * c + ss * ss);
    return v;
}

struct FamilyAFrame {
    Eigen::MatrixXd C;   // orthonormal frame coefficients
    double a1 = 0, a2 = 0;  // a-period normalizations
};

FamilyAFrame family_a_frame(const RealHyperellipticCurve& curve, const ComessattiPeriods& periods,
                            const QuadratureSpec& spec) {
    FamilyAPeriodData data;
    periods_family_a(curve, spec, &data);
    FamilyAFrame fr;
    fr.C = orthonormal_frame(periods.T);
    fr.a1 = data.a_period_1;
    fr.a2 = data.a_period_2;
    return fr;
}

double family_a_length(const RealHyperellipticCurve& curve, const ComessattiPeriods& periods,
                       const QuadratureSpec& spec) {
    const FamilyAFrame fr = family_a_frame(curve, periods, spec);
    // ds = || C (cos s / a1, sin s / a2) || / sqrt(fc(s)) in the tan
    // substitution; factor 2 for the double cover of P^1(R).
    SingularIntegrand f;
    f.a = -kPi / 2;
    f.b = kPi / 2;
    f.pattern = SingularityPattern::none;
    f.smooth_part = [&](double s) {
        Eigen::Vector2d v(std::cos(s) / fr.a1, std::sin(s) / fr.a2);
        return (fr.C * v).norm() / std::sqrt(family_a_fc(curve, s));
    };
    return 2.0 * integrate(f, spec);
}

struct MCurveFrame {
    Eigen::MatrixXd A;       // a-period matrix
    Eigen::MatrixXd Ainv;
    Eigen::MatrixXd CAinv;   // orthonormal frame applied to A-normalization
    Eigen::MatrixXd im_half; // g x g, column k = Im offset added when crossing gap k+1
};

MCurveFrame m_curve_frame(const RealHyperellipticCurve& curve, const ComessattiPeriods& periods,
                          const QuadratureSpec& spec) {
    MCurvePeriodData data;
    periods_m_curve(curve, spec, &data);
    MCurveFrame fr;
    fr.A = data.A;
    fr.Ainv = data.A.inverse();
    fr.CAinv = orthonormal_frame(periods.T) * fr.Ainv;
    fr.im_half = 0.5 * (fr.Ainv * data.B_im);
    return fr;
}

// || C A^{-1} (1, x, ..., x^{g-1})^T ||, the Bergman metric density against
// dx / sqrt(p) on real arcs.
double m_curve_density(const Eigen::MatrixXd& CAinv, double x) {
    const auto g = CAinv.rows();
    Eigen::VectorXd v(g);
    double xp = 1.0;
    for (Eigen::Index j = 0; j < g; ++j) {
        v(j) = xp;
        xp *= x;
    }
    return (CAinv * v).norm();
}

double m_curve_length(const RealHyperellipticCurve& curve, const ComessattiPeriods& periods,
                      const QuadratureSpec& spec) {
    const MCurveFrame fr = m_curve_frame(curve, periods, spec);
    const auto& r = curve.params();
    const int g = curve.genus();
    const int n = 2 * g + 2;
    double total = 0.0;

    // Bounded ovals: doubled arcs between consecutive roots where p > 0.
    for (int k = 0; k < g; ++k) {
        const double lo = r[static_cast<size_t>(2 * k + 1)];
        const double hi = r[static_cast<size_t>(2 * k + 2)];
        SingularIntegrand f;
        f.a = lo;
        f.b = hi;
        f.pattern = SingularityPattern::inv_sqrt_both;
        f.smooth_part = [&, lo, hi](double x) {
            double rest = -1.0;
            for (int i = 0; i < n; ++i) {
                const double ri = r[static_cast<size_t>(i)];
                if (ri == lo || ri == hi) continue;
                rest *= (x - ri);
            }
            return m_curve_density(fr.CAinv, x) / std::sqrt(rest);
        };
        total += 2.0 * integrate(f, spec);
    }

    // Unbounded oval through infinity: the two rays, doubled.
    auto ray = [&](double root, double dir) {
        SingularIntegrand f;
        f.a = 0.0;
        f.b = std::numeric_limits<double>::infinity();
        f.pattern = SingularityPattern::inv_sqrt_left;
        f.smooth_part = [&, root, dir](double u) {
            const double x = root + dir * u;
            double rest = dir;
            for (int i = 0; i < n; ++i) {
                const double ri = r[static_cast<size_t>(i)];
                if (ri == root) continue;
                rest *= (x - ri);
            }
            return m_curve_density(fr.CAinv, x) / std::sqrt(rest);
        };
        return integrate(f, spec);
    };
    total += 2.0 * (ray(r[static_cast<size_t>(n - 1)], +1.0) + ray(r[0], -1.0));
    return total;
}

std::vector<TorusPolyline> family_a_polylines(const RealHyperellipticCurve& curve,
                                              const ComessattiPeriods& periods, int n_samples,
                                              const QuadratureSpec& spec) {
    const FamilyAFrame fr = family_a_frame(curve, periods, spec);
    const int half = n_samples / 2 + 1;
    auto integrand = [&](double s, Eigen::VectorXd& v) {
        const double root = std::sqrt(family_a_fc(curve, s));
        v(0) = std::cos(s) / (fr.a1 * root);
        v(1) = std::sin(s) / (fr.a2 * root);
    };
    // Branch w = +sqrt(f): z from -inf to +inf via z = tan(s).
    Eigen::MatrixXd cum = cumulative(integrand, -kPi / 2, kPi / 2, half, 2);
    const Eigen::RowVector2d tot = cum.row(half - 1);

    TorusPolyline line;
    line.g = 2;
    line.component_label = 0;
    line.closed = true;
    line.lift.resize(2 * (half - 1) + 1, 2);
    for (int i = 0; i < half; ++i) line.lift.row(i) = cum.row(i);
    // Branch w = -sqrt(f): continues from the far point back to the start.
    for (int i = 1; i < half; ++i) line.lift.row(half - 1 + i) = tot - cum.row(i);
    line.closure_defect = dist_to_lattice(
        (line.lift.row(line.lift.rows() - 1) - line.lift.row(0)).transpose());
    line.points = mod_unit(line.lift);
    if (line.closure_defect > 1e-4)
        throw AbelJacobiError("abel_jacobi: family A oval failed to close up");
    return {line};
}

std::vector<TorusPolyline> m_curve_polylines(const RealHyperellipticCurve& curve,
                                             const ComessattiPeriods& periods, int n_samples,
                                             const QuadratureSpec& spec) {
    const MCurveFrame fr = m_curve_frame(curve, periods, spec);
    const auto& r = curve.params();
    const int g = curve.genus();
    const int n = 2 * g + 2;
    const Eigen::MatrixXd Tinv = periods.T.inverse();
    std::vector<TorusPolyline> lines;

    // Bounded oval k: top arc left to right, bottom arc back.
    for (int k = 0; k < g; ++k) {
        const double lo = r[static_cast<size_t>(2 * k + 1)];
        const double hi = r[static_cast<size_t>(2 * k + 2)];
        const int half = n_samples / 2 + 1;
        auto integrand = [&](double phi, Eigen::VectorXd& v) {
            const double sn = std::sin(phi);
            const double x = lo + (hi - lo) * sn * sn;
            double rest = -1.0;
            for (int i = 0; i < n; ++i) {
                const double ri = r[static_cast<size_t>(i)];
                if (ri == lo || ri == hi) continue;
                rest *= (x - ri);
            }
            const double w = 2.0 / std::sqrt(rest);  // dx / sqrt(p) = 2 dphi / sqrt(rest)
            double xp = 1.0;
            for (int j = 0; j < g; ++j) {
                v(j) = w * xp;
                xp *= x;
            }
        };
        Eigen::MatrixXd cum = cumulative(integrand, 0.0, kPi / 2, half, g);
        const Eigen::RowVectorXd tot = cum.row(half - 1);

        TorusPolyline line;
        line.g = g;
        line.component_label = static_cast<std::uint32_t>(1u << k);
        line.closed = true;
        line.lift.resize(2 * (half - 1) + 1, g);
        Eigen::RowVectorXd offset = Eigen::RowVectorXd::Zero(g);
        for (int j = 0; j < k; ++j) offset(j) = 0.5;  // half a-periods along the base path
        for (int i = 0; i < half; ++i)
            line.lift.row(i) = offset + (fr.Ainv * cum.row(i).transpose()).transpose();
        // Bottom arc retraces x from hi to lo on the other branch.
        for (int i = 1; i < half; ++i)
            line.lift.row(half - 1 + i) =
                offset +
                (fr.Ainv * (2.0 * tot - cum.row(half - 1 - i)).transpose()).transpose();
        line.closure_defect = dist_to_lattice(
            (line.lift.row(line.lift.rows() - 1) - line.lift.row(0)).transpose());
        if (line.closure_defect > 1e-4)
            throw AbelJacobiError("abel_jacobi: bounded oval failed to close up");
        line.points = mod_unit(line.lift);

        // Component label from the half-period imaginary offset accumulated
        // crossing gaps 1..k of the base path: l = 2 T^{-1} Im mod 2.
        Eigen::VectorXd im = Eigen::VectorXd::Zero(g);
        for (int i = 0; i <= k; ++i) im += fr.im_half.col(i);
        Eigen::VectorXd l = 2.0 * (Tinv * im);
        std::uint32_t label = 0;
        for (int j = 0; j < g; ++j) {
            const long b = std::lround(l(j));
            if (std::fabs(l(j) - static_cast<double>(b)) > 1e-6)
                throw AbelJacobiError("abel_jacobi: non half-period component offset");
            if (b & 1) label |= (1u << j);
        }
        line.component_label = label;
        lines.push_back(std::move(line));
    }

    // Unbounded oval through infinity, base point at the leftmost root.
    {
        const double right = r[static_cast<size_t>(n - 1)];
        const double left = r[0];
        const int quarter = std::max(n_samples / 4 + 1, 17);
        const double theta_max = kPi / 2 - 1e-6;
        auto ray_integrand = [&](double root, double dir) {
            return [&, root, dir](double th, Eigen::VectorXd& v) {
                const double tn = std::tan(th);
                const double x = root + dir * tn * tn;
                double rest = dir;
                for (int i = 0; i < n; ++i) {
                    const double ri = r[static_cast<size_t>(i)];
                    if (ri == root) continue;
                    rest *= (x - ri);
                }
                // dx / sqrt(p) = dir 2 tan sec^2 dth / (tan sqrt(rest)) = 2 dir sec^2 / sqrt(rest)
                const double w = 2.0 / (std::cos(th) * std::cos(th) * std::sqrt(rest));
                double xp = 1.0;
                for (int j = 0; j < g; ++j) {
                    v(j) = w * xp;
                    xp *= x;
                }
            };
        };
        // L = int over the left ray oriented outward from the base point,
        // R = int over the right ray outward from the largest root.
        Eigen::MatrixXd cumL = cumulative(ray_integrand(left, -1.0), 0.0, theta_max, quarter, g);
        Eigen::MatrixXd cumR = cumulative(ray_integrand(right, +1.0), 0.0, theta_max, quarter, g);
        const Eigen::RowVectorXd Ltot = cumL.row(quarter - 1);
        const Eigen::RowVectorXd Rtot = cumR.row(quarter - 1);

        // Relative orientation of the two rays on one w-branch is fixed by
        // continuity through infinity; resolved by requiring integer closure.
        double sigma = 1.0;
        {
            const Eigen::VectorXd c1 = fr.Ainv * (2.0 * (Ltot + Rtot)).transpose();
            const Eigen::VectorXd c2 = fr.Ainv * (2.0 * (Ltot - Rtot)).transpose();
            sigma = (dist_to_lattice(c1) <= dist_to_lattice(c2)) ? 1.0 : -1.0;
        }

        TorusPolyline line;
        line.g = g;
        line.component_label = 0;
        line.closed = true;
        const int m = quarter;
        line.lift.resize(4 * (m - 1) + 1, g);
        int row = 0;
        // leg 1: base point outward along the left ray
        for (int i = 0; i < m; ++i) line.lift.row(row++) = (fr.Ainv * cumL.row(i).transpose()).transpose();
        // leg 2: inward along the right ray (crossing infinity)
        Eigen::RowVectorXd pos = line.lift.row(row - 1);
        for (int i = m - 2; i >= 0; --i)
            line.lift.row(row++) =
                pos + sigma * (fr.Ainv * (Rtot - cumR.row(i)).transpose()).transpose();
        // leg 3: outward along the right ray on the other branch
        pos = line.lift.row(row - 1);
        for (int i = 1; i < m; ++i)
            line.lift.row(row++) = pos + sigma * (fr.Ainv * cumR.row(i).transpose()).transpose();
        // leg 4: inward along the left ray, closing at the base point
        pos = line.lift.row(row - 1);
        for (int i = m - 2; i >= 0; --i)
            line.lift.row(row++) = pos + (fr.Ainv * (Ltot - cumL.row(i)).transpose()).transpose();

        line.closure_defect = dist_to_lattice(
            (line.lift.row(line.lift.rows() - 1) - line.lift.row(0)).transpose());
        if (line.closure_defect > 1e-4)
            throw AbelJacobiError("abel_jacobi: unbounded oval failed to close up");
        line.points = mod_unit(line.lift);
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace

Eigen::MatrixXd orthonormal_frame(const Eigen::MatrixXd& T) {
    const Eigen::MatrixXd B = spd_sqrt_factor(T);
    return B.inverse();
}

double real_locus_length(const RealHyperellipticCurve& curve, const ComessattiPeriods& periods,
                         const QuadratureSpec& spec) {
    return curve.family() == CurveFamily::family_a ? family_a_length(curve, periods, spec)
                                                   : m_curve_length(curve, periods, spec);
}

std::vector<TorusPolyline> abel_jacobi_real_polyline(const RealHyperellipticCurve& curve,
                                                     const ComessattiPeriods& periods,
                                                     int n_samples, const QuadratureSpec& spec) {
    if (n_samples < 64) throw AbelJacobiError("abel_jacobi: need at least 64 samples per oval");
    return curve.family() == CurveFamily::family_a
               ? family_a_polylines(curve, periods, n_samples, spec)
               : m_curve_polylines(curve, periods, n_samples, spec);
}

double polyline_bergman_length(const TorusPolyline& line, const Eigen::MatrixXd& T) {
    const Eigen::MatrixXd metric = T.inverse();
    double len = 0.0;
    for (Eigen::Index i = 1; i < line.lift.rows(); ++i) {
        const Eigen::VectorXd d = (line.lift.row(i) - line.lift.row(i - 1)).transpose();
        len += std::sqrt(d.dot(metric * d));
    }
    return len;
}

}  // namespace realdiv
