#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realdiv/curves.hpp"
#include "realdiv/json_io.hpp"

using namespace realdiv;

TEST_CASE("family A construction and the one-parameter specialization") {
    const auto c = make_family_a_eps(0.25);
    CHECK(c.params()[0] == doctest::Approx(0.5625));
    CHECK(c.params()[1] == 1.0);
    CHECK(c.params()[2] == doctest::Approx(1.5625));
    CHECK(c.genus() == 2);
    const auto t = topological_type(c);
    CHECK(t.g == 2);
    CHECK(t.r == 1);
    CHECK(t.a == 0);

    CHECK_NOTHROW(make_family_a(1, 2, 3));
    CHECK_THROWS_AS(make_family_a(1, 1, 2), CurveError);
    CHECK_THROWS_AS(make_family_a(0, 1, 2), CurveError);
    CHECK_THROWS_AS(make_family_a(2, 1, 3), CurveError);
}

TEST_CASE("family A has no real branch points") {
    const auto c = make_family_a(1, 2, 3);
    for (int i = 0; i <= 1000; ++i) {
        const double x = -50.0 + 0.1 * i;
        CHECK(c.family_a_f(x * x) > 0.0);
    }
}

TEST_CASE("m-curve construction") {
    const auto c = make_m_curve({0, 1, 2, 3, 4, 5});
    CHECK(c.genus() == 2);
    const auto t = topological_type(c);
    CHECK(t.g == 2);
    CHECK(t.r == 3);
    CHECK(t.a == 0);

    const auto c8 = make_m_curve({0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(c8.genus() == 3);
    CHECK(topological_type(c8).r == 4);

    CHECK_THROWS_AS(make_m_curve({-1, 1}), CurveError);          // genus 0
    CHECK_THROWS_AS(make_m_curve({0, 1, 2}), CurveError);        // odd count
    CHECK_THROWS_AS(make_m_curve({0, 1, 1, 2, 3, 4}), CurveError);  // repeated root
}

TEST_CASE("m-curve sign pattern gives g+1 ovals") {
    const std::vector<double> roots{-2.5, -1, 0.5, 2, 3, 7};
    const auto c = make_m_curve(roots);
    const int g = c.genus();
    // p > 0 on the bounded ovals [r2,r3], [r4,r5], < 0 on the gaps.
    for (int k = 1; k <= g; ++k) {
        const double mid = 0.5 * (roots[2 * k - 1] + roots[2 * k]);
        CHECK(c.m_curve_p(mid) > 0.0);
    }
    for (int k = 1; k <= g + 1; ++k) {
        const double mid = 0.5 * (roots[2 * k - 2] + roots[2 * k - 1]);
        CHECK(c.m_curve_p(mid) < 0.0);
    }
    CHECK(c.m_curve_p(roots.back() + 1.0) > 0.0);
    CHECK(c.m_curve_p(roots.front() - 1.0) > 0.0);
}

TEST_CASE("emitted topological types are admissible") {
    CHECK(admissible_topological_type(topological_type(make_family_a(1, 2, 3))));
    CHECK(admissible_topological_type(topological_type(make_m_curve({0, 1, 2, 3, 4, 5}))));
    CHECK(admissible_topological_type(topological_type(make_m_curve({0, 1, 2, 3, 4, 5, 6, 7}))));

    CHECK(admissible_topological_type({2, 1, 0}));
    CHECK_FALSE(admissible_topological_type({2, 4, 0}));  // r > g+1
    CHECK_FALSE(admissible_topological_type({2, 0, 0}));  // r=0 needs a=1
    CHECK_FALSE(admissible_topological_type({2, 3, 1}));  // r=g+1 needs a=0
    CHECK_FALSE(admissible_topological_type({2, 2, 0}));  // parity violated
    CHECK(admissible_topological_type({2, 2, 1}));
}

TEST_CASE("curve JSON round trip") {
    const auto a = make_family_a_eps(0.3);
    const auto aj = curve_from_json(to_json(a));
    CHECK(aj.family() == CurveFamily::family_a);
    CHECK(aj.params() == a.params());

    const auto m = make_m_curve({0, 0.5, 1.25, 2, 3, 4.5});
    const auto mj = curve_from_json(to_json(m));
    CHECK(mj.family() == CurveFamily::m_curve);
    CHECK(mj.params() == m.params());

    CHECK_THROWS_AS(curve_from_json(nlohmann::json{{"family", "nope"}, {"params", {1.0}}}),
                    CurveError);
}
