#include <doctest.h>

#include "slidingcones/onedim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace slidingcones;

namespace {
constexpr double kPi = 3.14159265358979323846;
double deg(double d) { return d * kPi / 180.0; }

// brute-force minimizer: coarse grid bracket, then bisection on the
// derivative of the printed energy formula
double contact_oracle(double theta, double alpha) {
    double c = std::cos(theta);
    double lo = -1.0, hi = c;
    double best_x = lo, best_e = join_energy(lo + 1e-15, theta, alpha);
    const int grid = 4000;
    for (int i = 0; i <= grid; ++i) {
        double x = lo + (hi - lo) * i / grid;
        double e = join_energy(std::min(x, c), theta, alpha);
        if (e < best_e) {
            best_e = e;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / grid);
    double b = std::min(hi, best_x + (hi - lo) / grid);
    if (join_energy_dx(a, theta, alpha) >= 0.0) return a <= lo + 1e-12 ? lo : a;
    if (join_energy_dx(b, theta, alpha) <= 0.0) return b;
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        double m = 0.5 * (a + b);
        (join_energy_dx(m, theta, alpha) < 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

// closed-form competitor energies for the V cone in the unit ball
double y_pinch_energy(double theta) {
    // stem on the axis, arms leaving the junction at 120 degrees
    return std::sin(theta) + std::sqrt(3.0) * std::cos(theta);
}

double push_down_energy(double theta, double alpha) {
    double c = std::cos(theta), s = std::sin(theta);
    double x = alpha < 1.0 ? c - alpha * s / std::sqrt(1.0 - alpha * alpha) : 0.0;
    x = std::clamp(x, 0.0, c);
    return 2.0 * (alpha * x + std::hypot(c - x, s));
}
} // namespace

TEST_CASE("theta_alpha endpoints") {
    CHECK(theta_alpha(0.0) == doctest::Approx(kPi / 2.0));
    CHECK(theta_alpha(1.0) == doctest::Approx(0.0));
    CHECK(theta_alpha(0.5) == doctest::Approx(kPi / 3.0));
    CHECK_THROWS_AS(theta_alpha(-0.1), std::domain_error);
    CHECK_THROWS_AS(theta_alpha(1.1), std::domain_error);
}

TEST_CASE("join energy derivatives at the contact point") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> th(0.2, kPi / 2.0), al(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        double theta = th(rng), alpha = al(rng);
        double h = 1e-5;
        double d_fd = (join_energy(h, theta, alpha) - join_energy(-h, theta, alpha)) / (2.0 * h);
        CHECK(std::abs(d_fd - (alpha - std::cos(theta))) <= 1e-6);
        double d2_fd = (join_energy(h, theta, alpha) - 2.0 * join_energy(0.0, theta, alpha) +
                        join_energy(-h, theta, alpha)) / (h * h);
        CHECK(std::abs(d2_fd - std::sin(theta) * std::sin(theta)) <= 1e-4);
    }
    CHECK(join_energy(0.0, kPi / 2.0, 0.3) == doctest::Approx(1.3));
}

TEST_CASE("optimal contact against the search oracle") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> th(0.05, kPi / 2.0), al(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        double theta = th(rng), alpha = al(rng);
        double x = optimal_contact(theta, alpha);
        double ref = contact_oracle(theta, alpha);
        CHECK(std::abs(x - ref) <= 1e-8);
    }
    SUBCASE("critical point sits at the origin exactly when cos(theta) = alpha") {
        double theta = deg(54.0);
        CHECK(std::abs(optimal_contact(theta, std::cos(theta))) <= 1e-14);
    }
    SUBCASE("alpha = 0 pushes the contact to the foot of the branch") {
        CHECK(optimal_contact(deg(50.0), 0.0) == doctest::Approx(std::cos(deg(50.0))));
    }
    SUBCASE("alpha = 1 pushes the contact to the far endpoint") {
        CHECK(optimal_contact(deg(60.0), 1.0) == doctest::Approx(-1.0));
    }
}

TEST_CASE("classification corpus") {
    auto check = [](std::vector<Branch1D> branches, double alpha, bool expect) {
        auto v = is_minimal_1d(branches, alpha);
        INFO(v.reason);
        CHECK(v.minimal == expect);
    };
    double a9 = 0.9, ta9 = std::acos(0.9); // ~25.84 degrees

    // one branch
    check({{deg(90), false}}, 0.5, true);
    check({{deg(60), false}}, 0.5, false);
    check({{0.0, true}}, 0.5, false);
    // two branches, both on the boundary: the boundary line itself
    check({{0.0, true}, {deg(180), true}}, 0.25, true);
    check({{0.0, true}, {deg(180), true}}, 1.0, true);
    // two branches, one on the boundary: optimal contact profile
    check({{deg(180), true}, {deg(60), false}}, 0.5, true);
    check({{deg(180), true}, {deg(60), false}}, 0.6, false);
    check({{0.0, true}, {deg(120), false}}, 0.5, true);
    check({{deg(180), true}, {deg(45), false}}, std::cos(deg(45)), true);
    check({{deg(180), true}, {deg(90), false}}, 0.0, true);
    // two sloping branches: V cones
    check({{deg(10), false}, {deg(170), false}}, a9, false); // below the contact angle
    check({{deg(28), false}, {deg(152), false}}, a9, true);
    check({{deg(30), false}, {deg(150), false}}, a9, true);  // upper endpoint included
    check({{deg(31), false}, {deg(149), false}}, a9, false); // pinches to a Y
    check({{ta9, false}, {kPi - ta9, false}}, a9, true);     // lower endpoint tie
    check({{deg(40), false}, {deg(160), false}}, a9, false); // unbalanced
    check({{deg(20), false}, {deg(80), false}}, 0.5, false);
    // three branches
    check({{0.0, true}, {deg(180), true}, {deg(90), false}}, 0.2, true);
    check({{0.0, true}, {deg(180), true}, {deg(90), false}}, 0.95, true);
    check({{0.0, true}, {deg(180), true}, {deg(60), false}}, 0.5, false);
    check({{0.0, true}, {deg(30), false}, {deg(60), false}}, 0.5, false);
    check({{0.0, true}, {deg(95), false}, {deg(170), false}}, 0.5, false);
    check({{deg(20), false}, {deg(100), false}, {deg(140), false}}, 0.5, false);
    // four or more
    check({{0.0, true}, {deg(180), true}, {deg(90), false}, {deg(45), false}}, 0.5, false);
    check({{0.0, true}, {deg(180), true}, {deg(60), false}, {deg(120), false}}, 0.5, false);
    check({{deg(10), false}, {deg(60), false}, {deg(90), false}, {deg(110), false}, {deg(160), false}},
          0.5, false);
}

TEST_CASE("classification is invariant under reflecting the boundary direction") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> al(0.0, 1.0), an(0.05, kPi - 0.05);
    for (int trial = 0; trial < 120; ++trial) {
        double alpha = al(rng);
        int n = 1 + static_cast<int>(rng() % 3);
        std::vector<Branch1D> branches;
        if (rng() % 2) branches.push_back({rng() % 2 ? 0.0 : kPi, true});
        for (int k = 0; k < n; ++k) branches.push_back({an(rng), false});
        bool distinct = true;
        for (std::size_t i = 0; i < branches.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < branches.size(); ++j)
                if (std::abs(branches[i].angle - branches[j].angle) < 1e-6) distinct = false;
        if (!distinct) continue;
        std::vector<Branch1D> mirrored;
        for (const auto& b : branches) mirrored.push_back({kPi - b.angle, b.in_gamma});
        CHECK(is_minimal_1d(branches, alpha).minimal == is_minimal_1d(mirrored, alpha).minimal);
    }
}

TEST_CASE("V-cone rules agree with the closed-form competitor energies") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> th(deg(5), deg(85)), al(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        double theta = th(rng), alpha = al(rng);
        if (std::abs(theta - kPi / 6.0) < 1e-6 || std::abs(theta - theta_alpha(alpha)) < 1e-6)
            continue; // endpoints are tested separately
        double cone = 2.0;
        bool pinch_beats = theta > kPi / 6.0 && y_pinch_energy(theta) < cone - 1e-12;
        bool push_beats = push_down_energy(theta, alpha) < cone - 1e-12;
        auto verdict = is_minimal_1d({{theta, false}, {kPi - theta, false}}, alpha);
        INFO("theta " << theta << " alpha " << alpha << " pinch " << y_pinch_energy(theta)
                      << " push " << push_down_energy(theta, alpha));
        CHECK(verdict.minimal == !(pinch_beats || push_beats));
    }
    // the pinch energy matches the cone exactly at 30 degrees
    CHECK(y_pinch_energy(kPi / 6.0) == doctest::Approx(2.0).epsilon(1e-14));
    // the push-down energy matches the cone exactly at the contact angle
    CHECK(push_down_energy(theta_alpha(0.8), 0.8) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("profile energies in the unit ball") {
    CHECK(profile_energy_1d({ProfileKind::Gamma, 0.0}, 0.4) == doctest::Approx(0.8));
    CHECK(profile_energy_1d({ProfileKind::Vertical, 0.0}, 0.4) == doctest::Approx(1.0));
    CHECK(profile_energy_1d({ProfileKind::GammaPlusVertical, 0.0}, 0.4) == doctest::Approx(1.8));
    CHECK(profile_energy_1d({ProfileKind::TiltedPlusHorizontal, deg(60)}, 0.5) == doctest::Approx(1.5));
    CHECK(profile_energy_1d({ProfileKind::VCone, deg(28)}, 0.9) == doctest::Approx(2.0));
    CHECK(alpha_iii_sliding_threshold() == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("branch validation errors") {
    CHECK_THROWS_AS(is_minimal_1d({}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(is_minimal_1d({{0.5, true}}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(is_minimal_1d({{0.0, false}}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(is_minimal_1d({{0.7, false}, {0.7, false}}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(is_minimal_1d({{0.7, false}}, 1.5), std::domain_error);
}
