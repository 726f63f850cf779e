// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "realdiv/bergman.hpp"
#include "realdiv/bounds.hpp"
#include "realdiv/curves.hpp"
#include "realdiv/elliptic.hpp"
#include "realdiv/jacobian.hpp"
#include "realdiv/linalg.hpp"
#include "realdiv/periods.hpp"
#include "realdiv/torus_sim.hpp"

using namespace realdiv;

namespace {

const QuadratureSpec kSpec{};
constexpr double kPi = 3.14159265358979323846;

double K_of(double k) { return complete_elliptic_K(k * k); }

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Criterion {
    const char* label;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& why, const std::string& detail) {
    if (!ok && why.empty()) why = detail;
    return ok;
}

// 1. The elliptic constant K at modulus sqrt(2)/2.
bool crit1(std::string& why) {
    bool ok = true;
    const double t0 = now_ms();
    double k = 0;
    for (int i = 0; i < 1000; ++i) k = complete_elliptic_K(0.5);
    const double per_call_ms = (now_ms() - t0) / 1000.0;

    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", k);
    ok &= check(std::string(buf).substr(0, 5) == "1.854", why, "printed digits mismatch");
    ok &= check(std::fabs(k - 1.8540746773013719) < 1e-13 * k, why, "AGM value drifted");

    SingularIntegrand defining;
    defining.a = 0;
    defining.b = 1;
    defining.pattern = SingularityPattern::inv_sqrt_right;
    defining.smooth_part = [](double t) {
        return 1.0 / std::sqrt((1.0 + t) * (1.0 - 0.5 * t * t));
    };
    const double direct = integrate(defining, kSpec);
    ok &= check(std::fabs(direct - k) < 1e-10, why, "AGM vs quadrature disagreement");
    ok &= check(per_call_ms < 1.0, why, "runtime over 1 ms per call");
    return ok;
}

// 2. Volume of the real Jacobian decreases to 2 along the family.
bool crit2(std::string& why) {
    bool ok = true;
    const double t0 = now_ms();
    double prev = std::numeric_limits<double>::infinity();
    double last = 0;
    for (double eps : {0.5, 0.25, 0.1, 0.01}) {
        const auto p = periods_family_a(make_family_a_eps(eps), kSpec);
        const auto rep = vol_real(p);
        ok &= check(rep.vol_total > 2.0, why, "volume not above 2");
        ok &= check(rep.vol_total < prev, why, "volume not strictly decreasing");
        prev = rep.vol_total;
        last = rep.vol_total;
    }
    ok &= check(std::fabs(last - 2.0) < 0.05, why, "volume at eps=0.01 too far from 2");
    ok &= check(now_ms() - t0 < 5000.0, why, "runtime over 5 s");
    return ok;
}

// 3. The normalized length integral tends to pi and stays below 4.
bool crit3(std::string& why) {
    auto ell = [&](double eps) {
        const auto curve = make_family_a_eps(eps);
        SingularIntegrand f;
        f.a = 0;
        f.b = std::numeric_limits<double>::infinity();
        f.pattern = SingularityPattern::inv_sqrt_left;
        f.smooth_part = [curve](double t) { return std::sqrt((1 + t) / curve.family_a_f(t)); };
        return integrate(f, kSpec);
    };
    bool ok = check(std::fabs(ell(0.01) - kPi) < 0.15, why, "ell(0.01) not near pi");
    for (double eps : {0.05, 0.1, 0.25, 0.45})
        ok &= check(ell(eps) < 4.0, why, "ell not below 4");
    return ok;
}

// 4. Quadrature periods match the elliptic closed forms.
bool crit4(std::string& why) {
    bool ok = true;
    for (double eps : {0.1, 0.25, 0.45}) {
        const auto p = periods_family_a(make_family_a_eps(eps), kSpec);
        const double t11 = K_of((1 - eps) * std::sqrt(2 + eps) / 2) /
                           (2 * K_of((1 + eps) * std::sqrt(2 - eps) / 2));
        const double t22 =
            K_of(std::sqrt(2 - eps) / 2) / (2 * K_of(std::sqrt(2 + eps) / 2));
        ok &= check(std::fabs(p.T(0, 0) - t11) < 1e-8, why, "T11 mismatch");
        ok &= check(std::fabs(p.T(1, 1) - t22) < 1e-8, why, "T22 mismatch");
        ok &= check(p.residuals.symmetry_defect < 1e-10, why, "symmetry residual");
        ok &= check(p.residuals.integrality_defect < 1e-10, why, "integrality residual");
        ok &= check(p.residuals.min_eigenvalue_T > 0, why, "T not positive definite");
    }
    return ok;
}

// 5. Minkowski-sum bracket sits inside the proven sandwich.
bool crit5(std::string& why) {
    bool ok = true;
    const double K0 = complete_elliptic_K(0.5);
    for (double eps : {0.25, 0.45}) {
        const double t0 = now_ms();
        const auto curve = make_family_a_eps(eps);
        const auto p = periods_family_a(curve, kSpec);
        const auto lines = abel_jacobi_real_polyline(curve, p, 4096, kSpec);
        const auto bracket = min_cover_m(rasterize(lines, 512), 1);
        const double mid = 0.5 * (bracket.m_lower + bracket.m_upper);
        const double lo = K0 / std::sqrt(eps), hi = 19.0 * K0 / std::sqrt(eps);
        std::ostringstream det;
        det << "bracket [" << bracket.m_lower << "," << bracket.m_upper << "] outside ["
            << lo << "," << hi << "] at eps=" << eps;
        ok &= check(lo <= mid && mid <= hi, why, det.str());
        ok &= check(bracket.m_upper - bracket.m_lower <= 4, why, "bracket wider than 4");
        ok &= check(now_ms() - t0 < 60000.0, why, "runtime over 60 s per eps");
    }
    return ok;
}

// 6. Quarter-point asymptotics in the nodal limit.
bool crit6(std::string& why) {
    const double eps = 1e-3;
    const double se = std::sqrt(eps);
    const double K0 = complete_elliptic_K(0.5);
    const auto xb = xeps_bounds(eps, kSpec);
    const double target = 1.0 / (4.0 * std::sqrt(2.0) * K0);
    bool ok = check(std::fabs(xb.u / se - target) / target < 0.02, why, "u asymptotic off");
    ok &= check(std::fabs(xb.v / se - target) / target < 0.02, why, "v asymptotic off");
    const double sum = (xb.ell1 / xb.u + xb.ell2 / xb.v) * se;
    ok &= check(std::fabs(sum - 16.0 * K0) / (16.0 * K0) < 0.02, why, "perimeter sum off");
    return ok;
}

// 7. The maximal curve covers all Jacobian components within 2g - 1.
bool crit7(std::string& why) {
    const auto curve = make_m_curve({0, 1, 2, 3, 4, 5});
    const auto p = periods_m_curve(curve, kSpec);
    bool ok = check(real_component_count(p.M) == 4, why, "component count != 4");
    const auto lines = abel_jacobi_real_polyline(curve, p, 2048, kSpec);
    const auto bracket = min_cover_m(rasterize(lines, 512), 3);
    std::ostringstream det;
    det << "m_upper = " << bracket.m_upper << " exceeds 3";
    ok &= check(bracket.m_upper <= 3, why, det.str());
    return ok;
}

// 8. Reflection normal forms reproduce every component count to genus 6.
bool crit8(std::string& why) {
    const double t0 = now_ms();
    bool ok = true;
    for (int g_tilde = 0; g_tilde <= 3; ++g_tilde) {
        for (int r = 0; r <= 7; ++r) {
            for (int m = 0; m <= 7; ++m) {
                const int g = 2 * g_tilde + m + r - 1;
                if (g < 1 || g > 6) continue;
                if (r > 0) {
                    const auto M = reflection_normal_form(g_tilde, r, m, BaseLoop::S_r);
                    ok &= check(real_component_count(M) == (1L << (r - 1)), why,
                                "S_r census mismatch");
                }
                if (m > 0) {
                    const auto M = reflection_normal_form(g_tilde, r, m, BaseLoop::R_m);
                    const long expect = r > 0 ? (1L << (r - 1)) : (g % 2 == 0 ? 1 : 2);
                    ok &= check(real_component_count(M) == expect, why, "R_m census mismatch");
                }
            }
        }
    }
    ok &= check(now_ms() - t0 < 1000.0, why, "census slower than 1 s");
    return ok;
}

// 9. The general bound reduces exactly in the connected case and is scale
// invariant.
bool crit9(std::string& why) {
    bool ok = true;
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> uv(0.05, 20.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int g = 1 + static_cast<int>(rng() % 5);
        const double vol = uv(rng), len = uv(rng), c = uv(rng);
        const double reduced = metric_lower_bound(g, 1, vol, len);
        const double direct = std::pow(vol, 1.0 / g) / len - 1.0;
        ok &= check(std::fabs(reduced - direct) <=
                        1e-12 * std::max(1.0, std::fabs(direct)),
                    why, "r = 1 reduction violated");
        const int r = 1 + static_cast<int>(rng() % 4);
        const double base = metric_lower_bound(g, r, vol, len);
        const double scaled =
            metric_lower_bound(g, r, std::pow(c, -0.5 * g) * vol, std::pow(c, -0.5) * len);
        ok &= check(std::fabs(base - scaled) <= 1e-11 * std::max(1.0, std::fabs(base)), why,
                    "scale invariance violated");
    }
    return ok;
}

// 10. Reference constants of the singular quadrature and the 2-torsion entry.
bool crit10(std::string& why) {
    SingularIntegrand f1;
    f1.a = 0;
    f1.b = std::numeric_limits<double>::infinity();
    f1.pattern = SingularityPattern::inv_sqrt_left;
    f1.smooth_part = [](double t) { return 1.0 / ((t + 0.75) * std::sqrt(1.0 + t)); };
    bool ok = check(std::fabs(integrate(f1, kSpec) - 4.0 * kPi / (3.0 * std::sqrt(3.0))) < 1e-10,
                    why, "4 pi / (3 sqrt 3) constant");

    SingularIntegrand f2;
    f2.a = 0;
    f2.b = std::numeric_limits<double>::infinity();
    f2.pattern = SingularityPattern::decay_at_infinity;
    f2.smooth_part = [](double t) { return 1.0 / ((t + 0.75) * std::sqrt(1.0 + t)); };
    ok &= check(std::fabs(integrate(f2, kSpec) - std::log(9.0)) < 1e-10, why, "log 9 constant");

    for (double eps : {0.25, 0.45}) {
        const auto xb = xeps_bounds(eps, kSpec);
        bool found = false;
        for (const auto& e : xb.report.entries)
            if (e.name == "two_torsion_lower") {
                found = true;
                ok &= check(std::fabs(e.value - 1.0 / std::sqrt(eps)) < 1e-12, why,
                            "2-torsion value");
                ok &= check(e.kind == BoundKind::lower, why, "2-torsion kind");
            }
        ok &= check(found, why, "2-torsion entry missing");
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 elliptic constant", crit1},
        {"2 volume limit", crit2},
        {"3 length limit", crit3},
        {"4 period cross-check", crit4},
        {"5 bound sandwich", crit5},
        {"6 quarter-point asymptotics", crit6},
        {"7 many-ovals consistency", crit7},
        {"8 normal-form census", crit8},
        {"9 bound reduction", crit9},
        {"10 reference constants", crit10},
    };
    int failures = 0;
    for (auto& c : criteria) {
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (ok) {
            std::printf("criterion %s: PASS\n", c.label);
        } else {
            std::printf("criterion %s: FAIL (%s)\n", c.label, why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
