#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "realdiv/curves.hpp"
#include "realdiv/elliptic.hpp"
#include "realdiv/jacobian.hpp"
#include "realdiv/linalg.hpp"
#include "realdiv/periods.hpp"

using namespace realdiv;

namespace {
const QuadratureSpec kSpec{};

// K-ratio form of the T entries for the one-parameter family:
//   T11 = K(k1) / (2 K(k2)),  T22 = K(k3) / (2 K(k4)),
// with k1 = (1-eps) sqrt(2+eps)/2, k2 = (1+eps) sqrt(2-eps)/2,
//      k3 = sqrt(2-eps)/2,        k4 = sqrt(2+eps)/2.
double t11_closed(double eps) {
    const double k1 = (1 - eps) * std::sqrt(2 + eps) / 2;
    const double k2 = (1 + eps) * std::sqrt(2 - eps) / 2;
    return complete_elliptic_K(k1 * k1) / (2 * complete_elliptic_K(k2 * k2));
}
double t22_closed(double eps) {
    const double k3 = std::sqrt(2 - eps) / 2;
    const double k4 = std::sqrt(2 + eps) / 2;
    return complete_elliptic_K(k3 * k3) / (2 * complete_elliptic_K(k4 * k4));
}
}  // namespace

TEST_CASE("family A periods match the elliptic closed forms") {
    for (double eps : {0.1, 0.25, 0.45}) {
        const auto p = periods_family_a(make_family_a_eps(eps), kSpec);
        CHECK(p.g == 2);
        CHECK(p.M(0, 0) == 0);
        CHECK(p.M(0, 1) == 1);
        CHECK(p.M(1, 0) == 1);
        CHECK(p.M(1, 1) == 0);
        CHECK(p.T(0, 1) == 0.0);
        CHECK(p.T(0, 0) == doctest::Approx(t11_closed(eps)).epsilon(1e-9));
        CHECK(p.T(1, 1) == doctest::Approx(t22_closed(eps)).epsilon(1e-9));
        CHECK(p.residuals.symmetry_defect <= 1e-10);
        CHECK(p.residuals.min_eigenvalue_T > 0.0);
    }
}

TEST_CASE("family A periods approach the nodal limit") {
    const auto p3 = periods_family_a(make_family_a_eps(1e-3), kSpec);
    const auto p4 = periods_family_a(make_family_a_eps(1e-4), kSpec);
    CHECK(std::fabs(p3.T(0, 0) - 0.5) < 5e-3);
    CHECK(std::fabs(p4.T(0, 0) - 0.5) < 5e-4);
    CHECK(std::fabs(p4.T(1, 1) - 0.5) < 5e-4);
    CHECK(std::fabs(p4.T(0, 0) - 0.5) < std::fabs(p3.T(0, 0) - 0.5));
}

TEST_CASE("family A base integrals carry the expected K values") {
    const double eps = 0.25;
    FamilyAPeriodData d;
    periods_family_a(make_family_a_eps(eps), kSpec, &d);
    const double se = std::sqrt(eps);
    auto K_of = [](double k) { return complete_elliptic_K(k * k); };
    CHECK(d.A1 * se == doctest::Approx(K_of((1 + eps) * std::sqrt(2 - eps) / 2)).epsilon(1e-10));
    CHECK(d.B1 * se == doctest::Approx(K_of((1 - eps) * std::sqrt(2 + eps) / 2)).epsilon(1e-10));
    CHECK(d.A2 * se == doctest::Approx(K_of(std::sqrt(2 - eps) / 2)).epsilon(1e-10));
    CHECK(d.B2 * se == doctest::Approx(K_of(std::sqrt(2 + eps) / 2)).epsilon(1e-10));
}

TEST_CASE("m-curve periods: symmetric positive definite T with M = 0") {
    MCurvePeriodData data;
    const auto p = periods_m_curve(make_m_curve({0, 1, 2, 3, 4, 5}), kSpec, &data);
    CHECK(p.g == 2);
    CHECK(p.M.cwiseAbs().maxCoeff() == 0);
    CHECK(p.residuals.symmetry_defect < 1e-9);
    CHECK(p.residuals.min_eigenvalue_T > 0.0);
    // Frozen reference computed with an independent high-precision pipeline.
    CHECK(p.T(0, 0) == doctest::Approx(0.8793974892336523).epsilon(1e-8));
    CHECK(p.T(0, 1) == doctest::Approx(-0.2907618880694727).epsilon(1e-8));
    CHECK(p.T(1, 1) == doctest::Approx(0.8793974892336523).epsilon(1e-8));
}

TEST_CASE("m-curve periods: root symmetry forces swap symmetry of T") {
    const auto p = periods_m_curve(make_m_curve({-3, -2, -1, 1, 2, 3}), kSpec);
    CHECK(std::fabs(p.T(0, 0) - p.T(1, 1)) < 1e-8);
}

TEST_CASE("m-curve periods: genus 3") {
    const auto p = periods_m_curve(make_m_curve({0, 1, 2, 3, 4, 5, 6, 7}), kSpec);
    CHECK(p.g == 3);
    CHECK(p.residuals.symmetry_defect < 1e-9);
    CHECK(p.residuals.min_eigenvalue_T > 0.0);
    CHECK(p.T(0, 0) == doctest::Approx(0.9159619851478627).epsilon(1e-6));
}

TEST_CASE("rank of the reflection matrix matches the oval count") {
    // Both families satisfy rank_2(M) = g - (r - 1).
    const auto pa = periods_family_a(make_family_a_eps(0.25), kSpec);
    const auto ta = topological_type(make_family_a_eps(0.25));
    CHECK(rank_mod2(pa.M) == pa.g - (ta.r - 1));

    const auto pm = periods_m_curve(make_m_curve({0, 1, 2, 3, 4, 5}), kSpec);
    const auto tm = topological_type(make_m_curve({0, 1, 2, 3, 4, 5}));
    CHECK(rank_mod2(pm.M) == pm.g - (tm.r - 1));
}

TEST_CASE("reflection normal forms") {
    const auto J2 = reflection_normal_form(1, 1, 0, BaseLoop::S_r);
    CHECK(J2.rows() == 2);
    CHECK(J2(0, 1) == 1);
    CHECK(J2(1, 0) == 1);
    CHECK(J2(0, 0) == 0);

    for (int g = 1; g <= 5; ++g) {
        const auto Z = reflection_normal_form(0, g + 1, 0, BaseLoop::S_r);
        CHECK(Z.rows() == g);
        CHECK(Z.cwiseAbs().maxCoeff() == 0);
    }

    // (g~, r, m) = (0, 0, 4): g = 3 odd, no real points; two components.
    const auto M4 = reflection_normal_form(0, 0, 4, BaseLoop::R_m);
    CHECK(M4.rows() == 3);
    CHECK(rank_mod2(M4) == 2);
    CHECK(real_component_count(M4) == 2);

    CHECK_THROWS_AS(reflection_normal_form(1, 0, 2, BaseLoop::S_r), DomainError);
    CHECK_THROWS_AS(reflection_normal_form(1, 2, 0, BaseLoop::R_m), DomainError);
    CHECK_THROWS_AS(reflection_normal_form(0, 1, 0, BaseLoop::S_r), DomainError);  // g = 0
}

TEST_CASE("normal-form census reproduces the component counts") {
    // For curves with real points (r > 0): 2^{r-1} components; without real
    // points: 1 for even genus, 2 for odd.
    for (int g_tilde = 0; g_tilde <= 3; ++g_tilde) {
        for (int r = 0; r <= 7; ++r) {
            for (int m = 0; m <= 7; ++m) {
                const int g = 2 * g_tilde + m + r - 1;
                if (g < 1 || g > 6) continue;
                if (r > 0) {
                    const auto M = reflection_normal_form(g_tilde, r, m, BaseLoop::S_r);
                    CHECK(real_component_count(M) == (1L << (r - 1)));
                }
                if (m > 0) {
                    const auto M = reflection_normal_form(g_tilde, r, m, BaseLoop::R_m);
                    if (r > 0) {
                        CHECK(real_component_count(M) == (1L << (r - 1)));
                    } else {
                        CHECK(real_component_count(M) == (g % 2 == 0 ? 1 : 2));
                    }
                }
            }
        }
    }
}
