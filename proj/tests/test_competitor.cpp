#include <doctest.h>

#include "slidingcones/competitor.hpp"

#include <cmath>
#include <stdexcept>

using namespace slidingcones;

namespace {
// independent root finder for z(x; c) = 0 on (0, sqrt(2)/3)
double root_of_profile(double c) {
    double lo = 1e-9, hi = profile_x_max() - 1e-12;
    REQUIRE(profile_z(lo, c) < 0.0);
    REQUIRE(profile_z(hi, c) > 0.0);
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double m = 0.5 * (lo + hi);
        (profile_z(m, c) < 0.0 ? lo : hi) = m;
    }
    return 0.5 * (lo + hi);
}
} // namespace

TEST_CASE("profile curve pins the top point for every coefficient") {
    for (double c : {0.001, 0.01, 0.1, 1.0})
        CHECK(profile_z(profile_x_max(), c) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(profile_z(0.2, 0.0) == doctest::Approx(0.2 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(profile_z_prime(0.25, 0.1) == doctest::Approx(1.0 / std::sqrt(2.0) + 0.4).epsilon(1e-14));
    CHECK_THROWS_AS(profile_z(0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(profile_z(-0.3, 0.1), std::domain_error);
}

TEST_CASE("coefficient from the root and back") {
    double c = c_from_x0(0.1);
    CHECK(c == doctest::Approx(-0.1 / (std::sqrt(2.0) * std::log(3.0 / std::sqrt(2.0) * 0.1)))
                   .epsilon(1e-15));
    CHECK(c == doctest::Approx(0.0456).epsilon(1e-2));
    for (double x0 : {0.01, 0.05, 0.2, 0.4}) {
        double coeff = c_from_x0(x0);
        CHECK(profile_z(x0, coeff) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(root_of_profile(coeff) == doctest::Approx(x0).epsilon(1e-10));
    }
    // c grows without bound as the root approaches the top point
    CHECK(c_from_x0(profile_x_max() - 1e-9) > 1e6);
    CHECK_THROWS_AS(c_from_x0(0.0), std::domain_error);
    CHECK_THROWS_AS(c_from_x0(profile_x_max()), std::domain_error);
}

TEST_CASE("competitor energy approaches the cone energy as the triangle vanishes") {
    double cone = t_plus_cone_energy();
    CHECK(cone == doctest::Approx(4.0 * std::sqrt(2.0) / 3.0).epsilon(1e-15));
    auto e = competitor_energy(1e-7, 0.5);
    CHECK(e.report.j_alpha == doctest::Approx(cone).epsilon(1e-9));
    CHECK(competitor_energy(0.1, 0.5).report.on_gamma ==
          doctest::Approx(3.0 * std::sqrt(3.0) * 0.01).epsilon(1e-14));
}

TEST_CASE("quadrature stays below the closed-form bound") {
    for (double x0 : {0.01, 0.05, 0.1, 0.2, 0.3, 0.4}) {
        for (double alpha : {0.0, 0.5, 1.0}) {
            auto e = competitor_energy(x0, alpha);
            CHECK(e.report.j_alpha <= e.j_upper_bound + 1e-9);
        }
    }
}

TEST_CASE("closed-form gap identities") {
    // the bound assembly reproduces the printed gap expression exactly
    for (double x0 : {0.02, 0.1, 0.3}) {
        for (double alpha : {0.2, 0.7}) {
            auto e = competitor_energy(x0, alpha);
            CHECK(e.j_upper_bound - t_plus_cone_energy() ==
                  doctest::Approx(energy_gap(x0, alpha)).epsilon(1e-10));
        }
    }
    // direct arithmetic at the quoted sample point
    double l = std::log(3.0 / std::sqrt(2.0) * 0.02);
    double expect = 3.0 * 0.02 * 0.02 * (-std::sqrt(2.0) - std::sqrt(2.0) / l + 0.5 * std::sqrt(3.0));
    CHECK(energy_gap(0.02, 0.5) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(energy_gap(0.02, 0.5) == doctest::Approx(-1.21e-4).epsilon(0.01));
    // the gap vanishes exactly at the threshold weight of this x0
    for (double x0 : {0.02, 0.06, 0.1}) {
        double at = gap_threshold_alpha(x0);
        REQUIRE((at >= 0.0 && at <= 1.0));
        CHECK(energy_gap(x0, at) == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(energy_gap(x0, std::min(1.0, at + 1e-3)) > 0.0);
    }
    // wide triangles have no admissible zero crossing at all
    CHECK(gap_threshold_alpha(0.3) < 0.0);
    // above the threshold every competitor is worse
    for (double alpha : {std::sqrt(2.0 / 3.0), 0.9, 1.0})
        for (double x0 : {0.01, 0.1, 0.3, 0.44})
            CHECK(energy_gap(x0, alpha) > 0.0);
    // strictly increasing in alpha
    CHECK(energy_gap(0.1, 0.6) > energy_gap(0.1, 0.4));
}

TEST_CASE("search for a beating competitor") {
    auto hit = find_beating_competitor(0.5);
    REQUIRE(hit.has_value());
    CHECK(*hit < 0.0358);
    CHECK(energy_gap(*hit, 0.5) < 0.0);
    // the returned point is the closed-form gap minimizer
    for (double d : {-1e-4, 1e-4})
        CHECK(energy_gap(*hit + d, 0.5) >= energy_gap(*hit, 0.5) - 1e-15);

    for (double alpha : {0.0, 0.3, 0.8}) {
        auto x = find_beating_competitor(alpha);
        REQUIRE(x.has_value());
        CHECK(energy_gap(*x, alpha) < 0.0);
        // quadrature confirms the win whenever it is resolvable in doubles
        if (std::abs(energy_gap(*x, alpha)) > 1e-12) {
            auto q = competitor_energy(*x, alpha);
            CHECK(q.report.j_alpha < t_plus_cone_energy());
        }
    }
    CHECK_FALSE(find_beating_competitor(std::sqrt(2.0 / 3.0)).has_value());
    CHECK_FALSE(find_beating_competitor(0.9).has_value());
    CHECK_FALSE(find_beating_competitor(1.0).has_value());
}

TEST_CASE("quadrature energy is itself below the cone for beating parameters") {
    // the closed form is only an upper bound; the quadrature value must beat
    // the cone whenever the bound does
    for (double alpha : {0.2, 0.5}) {
        auto x = find_beating_competitor(alpha);
        REQUIRE(x.has_value());
        auto q = competitor_energy(*x, alpha);
        CHECK(q.report.j_alpha <= t_plus_cone_energy() + energy_gap(*x, alpha) + 1e-9);
    }
}
