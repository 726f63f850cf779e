#include "realdiv/bounds.hpp"

#include <cmath>
#include <limits>

#include "realdiv/bergman.hpp"
#include "realdiv/curves.hpp"
#include "realdiv/elliptic.hpp"
#include "realdiv/jacobian.hpp"
#include "realdiv/periods.hpp"

namespace realdiv {

bool sandwich_consistent(const BoundReport& report) {
    for (const auto& lo : report.entries) {
        if (lo.kind != BoundKind::lower) continue;
        for (const auto& hi : report.entries) {
            if (hi.kind != BoundKind::upper) continue;
            if (lo.value > hi.value) return false;
        }
    }
    return true;
}

double metric_lower_bound(int g, int r, double vol0, double len) {
    if (g < 1 || r < 1 || !(vol0 > 0.0) || !(len > 0.0))
        throw DomainError("metric_lower_bound: requires g, r >= 1 and positive vol, len");
    const double gd = g, rd = r;
    double binom_factor = 1.0;  // ((r-1)/e)^{g(r-1)}, taken as 1 when r = 1
    if (r > 1) binom_factor = std::pow((rd - 1.0) / 2.718281828459045, gd * (rd - 1.0));
    const double inner = std::pow(rd / 2.0, gd) * binom_factor * vol0 / std::pow(len, gd);
    return 2.0 * (1.0 - rd + std::pow(inner, 1.0 / (gd * rd))) - 1.0;
}

double metric_lower_bound_r1(int g, double vol, double len) {
    if (g < 1 || !(vol > 0.0) || !(len > 0.0))
        throw DomainError("metric_lower_bound_r1: requires g >= 1 and positive vol, len");
    return std::pow(vol, 1.0 / g) / len;
}

std::optional<double> upper_bound_many_ovals(int g, int r) {
    if (r == g || r == g + 1) return 2.0 * g - 1.0;
    return std::nullopt;
}

XepsBounds xeps_bounds(double eps, const QuadratureSpec& spec) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("xeps_bounds: requires 0 < eps < 1");
    const double K0 = complete_elliptic_K(0.5);
    const double sqe = std::sqrt(eps);

    const auto curve = make_family_a_eps(eps);
    FamilyAPeriodData pd;
    const auto periods = periods_family_a(curve, spec, &pd);
    const auto jac = vol_real(periods);

    XepsBounds out;
    out.report.curve_id = curve.id();
    out.ell1 = jac.lattice_side_lengths[0];
    out.ell2 = jac.lattice_side_lengths[1];

    // Quarter point of the Abel-Jacobi image in the orthonormal frame:
    // u = q1 * int_0^inf dx / sqrt(f(x^2)), v = q2 * int_0^inf x dx / sqrt(f),
    // both rewritten through the t = x^2 substitution.
    auto f_eps = [&](double t) { return curve.family_a_f(t); };
    SingularIntegrand it;
    it.a = 0.0;
    it.b = std::numeric_limits<double>::infinity();
    it.pattern = SingularityPattern::inv_sqrt_left;
    it.smooth_part = [&](double t) { return 1.0 / std::sqrt(f_eps(t)); };
    const double int_t = integrate(it, spec);  // int dt / sqrt(t f)
    SingularIntegrand iv;
    iv.a = 0.0;
    iv.b = std::numeric_limits<double>::infinity();
    iv.pattern = SingularityPattern::decay_at_infinity;
    iv.smooth_part = [&](double t) { return 1.0 / std::sqrt(f_eps(t)); };
    const double int_f = integrate(iv, spec);  // int dt / sqrt(f)

    const Eigen::MatrixXd C = orthonormal_frame(periods.T);
    out.u = C(0, 0) / pd.a_period_1 * 0.5 * int_t;
    out.v = C(1, 1) / pd.a_period_2 * 0.5 * int_f;

    auto& e = out.report.entries;
    e.push_back({"general_lower", BoundKind::lower, K0 / sqe, "0 < eps < 1/2",
                 "volume/length estimate, connected real locus"});
    e.push_back({"rectangle_lower", BoundKind::lower,
                 std::max(out.ell1 / (2.0 * out.u), out.ell2 / (2.0 * out.v)), "0 < eps < 1",
                 "outer rectangle [0,2u] x [-v,v] of the Abel-Jacobi image"});
    const double rhombus_need = out.ell1 / out.u + out.ell2 / out.v;
    e.push_back({"rhombus_upper", BoundKind::upper, 2.0 * std::ceil(rhombus_need / 2.0),
                 "0 < eps < 1", "inner rhombus (0,0),(u,v),(2u,0),(u,-v), smallest even 2m"});
    e.push_back({"uniform_upper", BoundKind::upper, 19.0 * K0 / sqe, "0 < eps < 1",
                 "inner rhombus with the uniform constant 19"});
    if (eps < 0.5)
        e.push_back({"two_torsion_lower", BoundKind::lower, 1.0 / sqe, "0 < eps < 1/2",
                     "reaching a real 2-torsion point from the outer rectangle"});
    return out;
}

}  // namespace realdiv
