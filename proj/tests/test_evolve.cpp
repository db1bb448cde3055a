#include <doctest.h>

#include "slidingcones/cones.hpp"
#include "slidingcones/energy.hpp"
#include "slidingcones/evolve.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace slidingcones;

namespace {
// fan disc in an arbitrary plane, rim pinned
TaggedMesh fan_disc(const Vec3& center, const Vec3& e1, const Vec3& e2, int spokes) {
    TaggedMesh mesh;
    mesh.vertices.push_back(center);
    mesh.tags.push_back(center.z == 0.0 ? VertexTag::OnGamma : VertexTag::Free);
    for (int i = 0; i < spokes; ++i) {
        double t = 2.0 * 3.14159265358979323846 * i / spokes;
        Vec3 v = center + e1 * std::cos(t) + e2 * std::sin(t);
        mesh.vertices.push_back(v);
        mesh.tags.push_back(VertexTag::Pinned);
    }
    for (int i = 0; i < spokes; ++i) mesh.triangles.push_back({0, 1 + i, 1 + (i + 1) % spokes});
    return mesh;
}

TaggedMesh random_cap(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> xy(-1.0, 1.0), zdist(0.1, 1.2);
    TaggedMesh mesh;
    int side = n;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            double z = zdist(rng);
            VertexTag tag = VertexTag::Free;
            if (i == 0) {
                z = 0.0;
                tag = VertexTag::OnGamma;
            } else if (i == side - 1) {
                tag = VertexTag::Pinned;
            }
            mesh.vertices.push_back({i * 0.5 + 0.05 * xy(rng), j * 0.5 + 0.05 * xy(rng), z});
            mesh.tags.push_back(tag);
        }
    for (int i = 0; i + 1 < side; ++i)
        for (int j = 0; j + 1 < side; ++j) {
            int a = i * side + j;
            mesh.triangles.push_back({a, a + side, a + 1});
            mesh.triangles.push_back({a + 1, a + side, a + side + 1});
        }
    return mesh;
}
} // namespace

TEST_CASE("gradient vanishes on a flat pinned-rim disc") {
    TaggedMesh vertical = fan_disc({0.0, 0.0, 2.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, 12);
    auto g = energy_gradient(vertical, 0.5);
    CHECK(norm(g[0]) <= 1e-12);
    TaggedMesh horizontal = fan_disc({0.0, 0.0, 1.5}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, 9);
    auto g2 = energy_gradient(horizontal, 0.5);
    CHECK(norm(g2[0]) <= 1e-12);
}

TEST_CASE("gradient scales like the mesh (degree-one homogeneity)") {
    TaggedMesh tri;
    tri.vertices = {{0.1, 0.0, 0.4}, {1.1, 0.2, 0.5}, {0.3, 0.9, 1.4}};
    tri.tags = {VertexTag::Free, VertexTag::Free, VertexTag::Free};
    tri.triangles = {{0, 1, 2}};
    auto g = energy_gradient(tri, 0.7);
    for (double t : {0.5, 2.0, 3.7}) {
        TaggedMesh scaled = tri;
        for (auto& v : scaled.vertices) v = v * t;
        auto gs = energy_gradient(scaled, 0.7);
        for (int i = 0; i < 3; ++i)
            CHECK(norm(gs[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(i)] * t) <= 1e-12 * t);
    }
}

TEST_CASE("gradient matches central finite differences on random meshes") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 4; ++trial) {
        TaggedMesh mesh = random_cap(rng, 5); // 25 vertices, tags mixed
        double alpha = 0.35;
        auto grad = energy_gradient(mesh, alpha);
        double h = 1e-6;
        for (int v = 0; v < mesh.vertex_count(); ++v) {
            for (int c = 0; c < 3; ++c) {
                auto bump = [&](double delta) {
                    TaggedMesh m = mesh;
                    auto& vv = m.vertices[static_cast<std::size_t>(v)];
                    (c == 0 ? vv.x : c == 1 ? vv.y : vv.z) += delta;
                    return j_alpha_mesh(m, alpha).j_alpha;
                };
                double fd = (bump(h) - bump(-h)) / (2.0 * h);
                double an = c == 0 ? grad[static_cast<std::size_t>(v)].x
                            : c == 1 ? grad[static_cast<std::size_t>(v)].y
                                     : grad[static_cast<std::size_t>(v)].z;
                VertexTag tag = mesh.tags[static_cast<std::size_t>(v)];
                if (tag == VertexTag::Pinned) {
                    CHECK(an == 0.0);
                } else if (tag == VertexTag::OnGamma && c == 2) {
                    CHECK(an == 0.0);
                } else {
                    CHECK(std::abs(fd - an) <= 1e-5);
                }
            }
        }
    }
}

TEST_CASE("gradient rejects degenerate triangles by index") {
    TaggedMesh mesh;
    mesh.vertices = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}};
    mesh.tags = {VertexTag::Free, VertexTag::Free, VertexTag::Free};
    mesh.triangles = {{0, 1, 2}};
    try {
        energy_gradient(mesh, 0.5);
        FAIL("expected a degenerate-triangle error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("0") != std::string::npos);
    }
}

TEST_CASE("a flat vertical disc is already stationary for the flow") {
    TaggedMesh disc = fan_disc({0.0, 0.0, 2.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, 16);
    EvolveConfig config;
    config.alpha = 0.5;
    config.max_steps = 120;
    auto result = evolve(disc, config);
    double before = j_alpha_mesh(disc, 0.5).j_alpha;
    double after = result.trace.back().energy.j_alpha;
    CHECK(std::abs(after - before) <= 1e-6 * before);
}

TEST_CASE("descent trace is monotone and respects the constraints") {
    // a coarse product mesh pushed off equilibrium: perturb interior vertices
    TaggedMesh mesh = build_mesh(ConeSpec::product({ProfileKind::Vertical, 0.0}), Window::ball(1.0), 8);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-0.05, 0.05);
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (mesh.tags[i] != VertexTag::Free) continue;
        mesh.vertices[i] += {d(rng), d(rng), d(rng)};
        mesh.vertices[i].z = std::max(mesh.vertices[i].z, 0.0);
    }
    EvolveConfig config;
    config.alpha = 0.4;
    config.max_steps = 200;
    config.averaging_every = 20;
    auto result = evolve(mesh, config);
    for (std::size_t i = 1; i < result.trace.size(); ++i)
        CHECK(result.trace[i].energy.j_alpha <= result.trace[i - 1].energy.j_alpha + 1e-12);
    for (std::size_t i = 0; i < result.mesh.vertices.size(); ++i) {
        CHECK(result.mesh.vertices[i].z >= 0.0);
        if (result.mesh.tags[i] == VertexTag::OnGamma) CHECK(result.mesh.vertices[i].z == 0.0);
        CHECK(result.mesh.tags[i] == mesh.tags[i]); // tags never change
        if (mesh.tags[i] == VertexTag::Pinned) {
            CHECK(result.mesh.vertices[i].x == mesh.vertices[i].x);
            CHECK(result.mesh.vertices[i].z == mesh.vertices[i].z);
        }
    }
    // the perturbed sheet relaxes back toward the flat half disc
    CHECK(result.trace.back().energy.j_alpha <
          j_alpha_mesh(mesh, 0.4).j_alpha - 1e-4);
}

TEST_CASE("identity pinch returns the mesh unchanged") {
    TaggedMesh mesh = build_mesh(ConeSpec::t_plus(), Window::simplex(), 4);
    PinchRecipe recipe;
    recipe.preset = PinchPreset::Identity;
    TaggedMesh out = pinch(mesh, recipe);
    CHECK(out.vertices.size() == mesh.vertices.size());
    CHECK(out.triangles == mesh.triangles);
}

TEST_CASE("pinch presets produce valid meshes with the new interface") {
    struct Case {
        PinchPreset preset;
        double phi;
    };
    for (const auto& c : {Case{PinchPreset::YPlusY, 0.5236}, Case{PinchPreset::YPlus2YLow, 0.3047},
                          Case{PinchPreset::YPlus2YHigh, 0.9273}, Case{PinchPreset::YPlus3YLow, 0.3047},
                          Case{PinchPreset::YPlus3YHigh, 0.9273}, Case{PinchPreset::TPlusY, 0.2527},
                          Case{PinchPreset::CPlus, 0.0}, Case{PinchPreset::Rectangle, 0.6},
                          Case{PinchPreset::PentagonPrism, 0.0}}) {
        auto fam = preset_family(c.preset, c.phi, 10, 0.7);
        fam.cone_mesh.validate();
        TaggedMesh pinched = pinch(fam.cone_mesh, fam.recipe);
        CHECK_NOTHROW(pinched.validate());
        CHECK(pinched.triangle_count() > 0);
        // the surgery rebuilt the neighborhood of the apex
        CHECK(pinched.triangle_count() != fam.cone_mesh.triangle_count());
    }
}

TEST_CASE("pinch rejects meshes without the referenced fold curves") {
    TaggedMesh disc = fan_disc({0.0, 0.0, 2.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, 8);
    PinchRecipe recipe;
    recipe.preset = PinchPreset::YPlus2YHigh;
    recipe.phi = 0.9273;
    CHECK_THROWS_AS(pinch(disc, recipe), std::invalid_argument);
    PinchRecipe apex_recipe;
    apex_recipe.preset = PinchPreset::CPlus;
    CHECK_THROWS_AS(pinch(disc, apex_recipe), std::invalid_argument);
}

TEST_CASE("mismatched curve discretizations are a surgery error") {
    auto fam = preset_family(PinchPreset::YPlus2YHigh, 0.9273, 8, 0.7);
    TaggedMesh broken = fam.cone_mesh;
    // retag and displace one vertex of one trace ray so the chains differ
    Vec3 ray = normalized({1.0, std::sqrt(3.0) * std::sin(0.9273), 0.0});
    for (std::size_t i = 0; i < broken.vertices.size(); ++i) {
        Vec3 v = broken.vertices[i];
        double t = dot(v, ray);
        if (t > 0.2 && t < 0.5 && norm(v - ray * t) < 1e-9) {
            broken.vertices[i] = v + Vec3{0.0, 0.0, 0.01};
            broken.tags[i] = VertexTag::Free;
            break;
        }
    }
    CHECK_THROWS_AS(pinch(broken, fam.recipe), std::invalid_argument);
}

TEST_CASE("every non-minimal preset descends strictly below its cone") {
    struct Case {
        PinchPreset preset;
        double phi;
        int res;
        int steps;
    };
    for (const auto& c :
         {Case{PinchPreset::YPlus3YLow, std::asin(0.3), 14, 1500},
          Case{PinchPreset::YPlus3YHigh, std::asin(0.8), 14, 1500},
          Case{PinchPreset::Rectangle, 0.6, 14, 1500},
          Case{PinchPreset::PentagonPrism, 0.0, 12, 1200}}) {
        auto fam = preset_family(c.preset, c.phi, c.res, 0.7);
        double alpha = fam.matched_alpha;
        double cone = j_alpha_mesh(fam.cone_mesh, alpha).j_alpha;
        TaggedMesh pinched = pinch(fam.cone_mesh, fam.recipe);
        EvolveConfig config;
        config.alpha = alpha;
        config.max_steps = c.steps;
        config.step_size = 0.05;
        config.averaging_every = 10;
        auto result = evolve(pinched, config);
        double margin = cone - result.trace.back().energy.j_alpha;
        INFO(fam.name << " margin " << margin);
        CHECK(margin > 1e-5);
    }
}

TEST_CASE("the pinched half-T beats the cone below the threshold and not above") {
    // competitor topology: apex opened into a boundary triangle sized from
    // the closed-form search
    auto fam = preset_family(PinchPreset::TPlusFat, 0.0, 14, 0.5);
    double cone = j_alpha_mesh(fam.cone_mesh, 0.5).j_alpha;
    TaggedMesh pinched = pinch(fam.cone_mesh, fam.recipe);
    EvolveConfig config;
    config.alpha = 0.5;
    config.max_steps = 1500;
    config.step_size = 0.02;
    config.averaging_every = 10;
    auto below = evolve(pinched, config);
    CHECK(below.trace.back().energy.j_alpha < cone - 1e-5);

    auto fam9 = preset_family(PinchPreset::TPlusFat, 0.0, 14, 0.9);
    config.alpha = 0.9;
    auto above = evolve(pinch(fam9.cone_mesh, fam9.recipe), config);
    double cone9 = j_alpha_mesh(fam9.cone_mesh, 0.9).j_alpha;
    CHECK(above.trace.back().energy.j_alpha >= cone9 * (1.0 - 5e-3));
}

TEST_CASE("trace serializes as csv") {
    std::vector<TraceRow> trace = {{0, make_energy_report(1.0, 0.5, 0.5), 0.05}};
    std::ostringstream os;
    write_trace_csv(os, trace);
    CHECK(os.str() == "step,off_gamma,on_gamma,j_alpha,step_size\n0,1,0.5,1.25,0.050000000000000003\n");
}
