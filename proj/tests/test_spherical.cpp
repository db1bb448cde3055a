#include <doctest.h>

#include "slidingcones/spherical.hpp"

#include <cmath>
#include <stdexcept>

using namespace slidingcones;

namespace {
constexpr double kPi = 3.14159265358979323846;

double arc_length(const ArcNet& net, const std::string& name) {
    for (const auto& a : net.arcs)
        if (a.name == name) return a.length;
    FAIL("missing arc " << name);
    return 0.0;
}
} // namespace

TEST_CASE("equiangular triangle side") {
    CHECK(triangle_side() == doctest::Approx(1.9106332362490186).epsilon(1e-12));
    CHECK(std::cos(triangle_side()) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(triangle_side() > kPi / 2.0);
}

TEST_CASE("rectangle relation: square fixed point by root solve") {
    // solve cos a = (3 - 5 cos a)/(5 - 3 cos a) by bisection on rect_side(a) - a
    double lo = 0.5, hi = 2.5;
    auto f = [](double a) { return rect_side(a) - a; };
    REQUIRE(f(lo) * f(hi) < 0.0);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double m = 0.5 * (lo + hi);
        (f(m) * f(lo) > 0.0 ? lo : hi) = m;
    }
    double fixed = 0.5 * (lo + hi);
    CHECK(std::abs(fixed - std::acos(1.0 / 3.0)) <= 1e-10);
}

TEST_CASE("rectangle relation is an involution and matches the half-angle form") {
    for (int i = 1; i < 200; ++i) {
        double a = kPi * i / 200.0;
        double b = rect_side(a);
        CHECK(std::abs(rect_side_half_angle(a) - b) <= 1e-12);
        CHECK(std::abs(rect_side(b) - a) <= 1e-10);
    }
    // degenerate endpoint: a -> pi gives b -> 0
    CHECK(rect_side(kPi - 1e-9) == doctest::Approx(0.0).epsilon(1e-3));
    CHECK_THROWS_AS(rect_side(0.0), std::domain_error);
    CHECK_THROWS_AS(rect_side(kPi), std::domain_error);
}

TEST_CASE("pentagon relation: symmetry and printed fixed point") {
    CHECK(pentagon_side(0.8, 1.1) == doctest::Approx(pentagon_side(1.1, 0.8)).epsilon(1e-15));
    // a = b = c reduces to cos^2 c = 1/3
    double lo = 0.8, hi = 1.2;
    auto f = [](double a) { return pentagon_side(a, a) - a; };
    REQUIRE(f(lo) * f(hi) < 0.0);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double m = 0.5 * (lo + hi);
        (f(m) * f(lo) > 0.0 ? lo : hi) = m;
    }
    double fixed = 0.5 * (lo + hi);
    CHECK(std::abs(std::cos(fixed) - 1.0 / std::sqrt(3.0)) <= 1e-10);
    CHECK(fixed == doctest::Approx(0.9553166181245093).epsilon(1e-9));
    CHECK_THROWS_AS(pentagon_side(0.05, 0.05), std::domain_error);
}

TEST_CASE("pentagon family: mirror symmetry of the output lengths") {
    ArcNet net = pentagon_family(0.7, 0.75);
    CHECK(arc_length(net, "gamma") == doctest::Approx(arc_length(net, "gamma_p")).epsilon(1e-12));
    CHECK(arc_length(net, "zeta") == doctest::Approx(arc_length(net, "zeta_p")).epsilon(1e-12));
    CHECK(arc_length(net, "delta") == doctest::Approx(arc_length(net, "delta_p")).epsilon(1e-12));
    CHECK(arc_length(net, "rho") == doctest::Approx(arc_length(net, "rho_p")).epsilon(1e-12));
    CHECK(net.junction_residual <= 1e-9);
    // node A carries the orthogonal radial arc
    bool found = false;
    for (const auto& n : net.nodes)
        if (n.name == "foot_A") {
            found = true;
            CHECK(n.contact == ContactKind::Orthogonal);
        }
    CHECK(found);
}

TEST_CASE("pentagon family: the middle side depends only on gamma") {
    double gamma = 0.8;
    double e1 = arc_length(pentagon_family(0.5, gamma), "eps");
    double e2 = arc_length(pentagon_family(0.9, gamma), "eps");
    double e3 = arc_length(pentagon_family(1.2, gamma), "eps");
    CHECK(std::abs(e1 - e2) <= 1e-9);
    CHECK(std::abs(e1 - e3) <= 1e-9);
    // while the radial arcs do change with the tilt
    CHECK(std::abs(arc_length(pentagon_family(0.5, gamma), "delta") -
                   arc_length(pentagon_family(0.9, gamma), "delta")) > 1e-3);
}

TEST_CASE("pentagon family satisfies the 120-degree side relation on adjacent triples") {
    // consistency of the junction-closure construction: for every pair of
    // adjacent sides the side adjacent to neither satisfies the corrected
    // relation 2 cos c = 1/3 + cos a + cos b + cos a cos b - 2 sin a sin b
    auto relation = [](double a, double b) {
        return std::acos((1.0 / 3.0 + std::cos(a) + std::cos(b) + std::cos(a) * std::cos(b) -
                          2.0 * std::sin(a) * std::sin(b)) / 2.0);
    };
    for (double gamma : {0.72, 0.8, 0.9, 1.0}) {
        ArcNet net = pentagon_family(0.8, gamma);
        double g = arc_length(net, "gamma"), z = arc_length(net, "zeta"),
               e = arc_length(net, "eps");
        // cyclic sides (g, z, e, z, g): pairs -> side adjacent to neither
        CHECK(std::abs(relation(g, g) - e) <= 1e-10); // pair (gamma', gamma) -> eps
        CHECK(std::abs(relation(g, z) - z) <= 1e-10); // pair (gamma, zeta) -> zeta'
        CHECK(std::abs(relation(z, e) - g) <= 1e-10); // pair (zeta, eps) -> gamma'
    }
    // the regular pentagon closes onto itself
    double greg = std::acos(std::sqrt(5.0) / 3.0);
    ArcNet net = pentagon_family(0.8, greg);
    CHECK(arc_length(net, "zeta") == doctest::Approx(greg).epsilon(1e-9));
    CHECK(arc_length(net, "eps") == doctest::Approx(greg).epsilon(1e-9));
}

TEST_CASE("pentagon family rejects inadmissible parameters") {
    CHECK_THROWS_AS(pentagon_family(-0.1, 0.8), std::domain_error);
    CHECK_THROWS_AS(pentagon_family(1.7, 0.8), std::domain_error);
    CHECK_THROWS_AS(pentagon_family(0.8, 3.1), std::domain_error);
    // far outside the window no symmetric pentagon closes
    CHECK_THROWS_AS(pentagon_family(0.8, 0.05), std::domain_error);
}
