#include "slidingcones/evolve.hpp"

#include "slidingcones/cones.hpp"
#include "slidingcones/competitor.hpp"
#include "slidingcones/foldcomplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace slidingcones {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 rotz(double az, const Vec3& v) {
    double c = std::cos(az), s = std::sin(az);
    return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

struct Chain {
    std::vector<int> idx;
    std::vector<double> t;
};

Chain find_ray_chain(const TaggedMesh& mesh, const Vec3& dir) {
    Vec3 d = normalized(dir);
    std::vector<std::pair<double, int>> hits;
    for (int i = 0; i < mesh.vertex_count(); ++i) {
        const Vec3& v = mesh.vertices[static_cast<std::size_t>(i)];
        double t = dot(v, d);
        if (t < -1e-9) continue;
        Vec3 off = v - d * t;
        if (norm(off) <= 1e-6 * (1.0 + t)) hits.emplace_back(t, i);
    }
    std::sort(hits.begin(), hits.end());
    Chain c;
    for (const auto& [t, i] : hits) {
        c.idx.push_back(i);
        c.t.push_back(t);
    }
    if (c.idx.size() < 4)
        throw std::invalid_argument("pinch: recipe references a fold-edge curve not present in the mesh");
    return c;
}

void match_chains(const Chain& a, const Chain& b) {
    if (a.idx.size() != b.idx.size())
        throw std::invalid_argument("pinch: mismatched curve lengths along the identified folds");
    for (std::size_t i = 0; i < a.t.size(); ++i)
        if (std::abs(a.t[i] - b.t[i]) > 1e-6 * (1.0 + a.t[i]))
            throw std::invalid_argument("pinch: mismatched curve parameters along the identified folds");
}

std::size_t snap_ring(const Chain& c, double rho) {
    std::size_t best = 0;
    double err = 1e300;
    for (std::size_t i = 0; i < c.t.size(); ++i) {
        double e = std::abs(c.t[i] - rho);
        if (e < err) {
            err = e;
            best = i;
        }
    }
    best = std::min(best, c.t.size() - 2);
    if (best < 2) best = 2;
    if (best + 1 >= c.t.size())
        throw std::invalid_argument("pinch: range does not leave room inside the window");
    return best;
}

// Vertices at radius t_k inside the wedge spanned by (ray1, ray2), ordered
// from ray1 to ray2.
std::vector<int> ring_arc(const TaggedMesh& mesh, const Vec3& ray1, const Vec3& ray2,
                          const Vec3& plane_normal, double radius) {
    Vec3 e1 = normalized(ray1);
    Vec3 e2 = normalized(cross(plane_normal, e1));
    double span = std::atan2(dot(normalized(ray2), e2), dot(normalized(ray2), e1));
    if (span < 0) span += 2.0 * kPi;
    std::vector<std::pair<double, int>> hits;
    for (int i = 0; i < mesh.vertex_count(); ++i) {
        const Vec3& v = mesh.vertices[static_cast<std::size_t>(i)];
        if (std::abs(dot(v, plane_normal)) > 1e-6 * (1.0 + radius)) continue;
        if (std::abs(norm(v) - radius) > 1e-6 * (1.0 + radius)) continue;
        double ang = std::atan2(dot(v, e2), dot(v, e1));
        if (ang < -1e-9 || ang > span + 1e-9) continue;
        hits.emplace_back(ang, i);
    }
    std::sort(hits.begin(), hits.end());
    std::vector<int> arc;
    for (const auto& [ang, i] : hits) arc.push_back(i);
    if (arc.size() < 2) throw std::invalid_argument("pinch: no closing arc found at the range radius");
    return arc;
}

// (the T1 transition for the Y compounds is realized by opening the apex
// into a small interface sheet standing on the boundary plane; see
// apex_split below)

// Pinch two adjacent sloping folds along their boundary trace rays: the
// covered strip between them retracts and a vertical sheet on the bisector
// joins the merged fold junction back to the boundary plane.
TaggedMesh gamma_pinch(const TaggedMesh& in, const Vec3& ray1, const Vec3& ray2, double rho,
                       double eps) {
    Chain a = find_ray_chain(in, ray1);
    Chain b = find_ray_chain(in, ray2);
    match_chains(a, b);
    std::size_t k = snap_ring(a, rho);
    double tk = a.t[k];
    Vec3 zhat{0.0, 0.0, 1.0};
    Vec3 e1 = normalized(ray1);
    Vec3 e2 = normalized(cross(zhat, e1));
    double span = std::atan2(dot(normalized(ray2), e2), dot(normalized(ray2), e1));
    if (span < 0) span += 2.0 * kPi;

    TaggedMesh mesh = in;
    std::map<int, int> lifted; // chain vertex -> lifted junction vertex
    std::vector<int> gamma_chain(k, -1);
    int apex = a.idx[0];
    gamma_chain[0] = apex;
    for (std::size_t i = 1; i < k; ++i) {
        Vec3 m = normalized(mesh.vertices[static_cast<std::size_t>(a.idx[i])] +
                            mesh.vertices[static_cast<std::size_t>(b.idx[i])]) *
                 a.t[i];
        double h = eps * std::sin(kPi * a.t[i] / tk);
        int li = mesh.vertex_count();
        mesh.vertices.push_back(m + zhat * h);
        mesh.tags.push_back(VertexTag::Free);
        lifted[a.idx[i]] = li;
        lifted[b.idx[i]] = li;
        int gi = mesh.vertex_count();
        mesh.vertices.push_back(m);
        mesh.tags.push_back(VertexTag::OnGamma);
        gamma_chain[i] = gi;
    }

    // drop the covered boundary strip between the rays inside the range
    std::vector<std::array<int, 3>> kept;
    for (const auto& tri : in.triangles) {
        bool strip = true, affected = false;
        for (int v : tri) {
            const Vec3& pos = in.vertices[static_cast<std::size_t>(v)];
            if (std::abs(pos.z) > 1e-9 || norm(pos) > tk * (1.0 + 1e-6) + 1e-9) strip = false;
            if (lifted.count(v)) affected = true;
        }
        if (strip) {
            Vec3 centroid = (in.vertices[static_cast<std::size_t>(tri[0])] +
                             in.vertices[static_cast<std::size_t>(tri[1])] +
                             in.vertices[static_cast<std::size_t>(tri[2])]) /
                            3.0;
            double ang = std::atan2(dot(centroid, e2), dot(centroid, e1));
            if (ang < 0) ang += 2.0 * kPi;
            if (ang > -1e-9 && ang < span + 1e-9) continue;
        }
        if (!affected) {
            kept.push_back(tri);
            continue;
        }
        std::array<int, 3> mapped = tri;
        for (auto& v : mapped) {
            auto it = lifted.find(v);
            if (it != lifted.end()) v = it->second;
        }
        kept.push_back(mapped);
    }
    mesh.triangles = std::move(kept);

    // vertical sheet between the merged junction and the boundary plane
    if (k >= 2) {
        mesh.triangles.push_back({apex, lifted[a.idx[1]], gamma_chain[1]});
        for (std::size_t i = 1; i + 1 < k; ++i) {
            int l0 = lifted[a.idx[i]], l1 = lifted[a.idx[i + 1]];
            int g0 = gamma_chain[i], g1 = gamma_chain[i + 1];
            mesh.triangles.push_back({l0, g0, l1});
            mesh.triangles.push_back({g0, g1, l1});
        }
        int lk = lifted[a.idx[k - 1]], gk = gamma_chain[k - 1];
        mesh.triangles.push_back({lk, a.idx[k], gk});
        mesh.triangles.push_back({lk, gk, b.idx[k]});
        auto arc = ring_arc(in, ray1, ray2, zhat, tk);
        if (arc.front() != a.idx[k]) std::reverse(arc.begin(), arc.end());
        for (std::size_t j = 0; j + 1 < arc.size(); ++j)
            mesh.triangles.push_back({gk, arc[j], arc[j + 1]});
    }

    TaggedMesh out = compacted(mesh);
    out.validate();
    return out;
}

struct ApexSplit {
    std::vector<Vec3> polygon;
    std::vector<VertexTag> tags;
    bool origin_facet = false; // keep the apex and fan the polygon on Gamma
};

TaggedMesh apex_split(const TaggedMesh& in, const ApexSplit& split) {
    int apex = -1;
    for (int i = 0; i < in.vertex_count(); ++i)
        if (norm(in.vertices[static_cast<std::size_t>(i)]) <= 1e-9) apex = i;
    if (apex < 0) throw std::invalid_argument("pinch: mesh has no apex vertex at the origin");

    TaggedMesh mesh = in;
    std::vector<int> poly;
    for (std::size_t j = 0; j < split.polygon.size(); ++j) {
        poly.push_back(mesh.vertex_count());
        Vec3 p = split.polygon[j];
        if (std::abs(p.z) <= 1e-12) p.z = 0.0;
        mesh.vertices.push_back(p);
        mesh.tags.push_back(split.tags[j]);
    }
    int m = static_cast<int>(poly.size());

    std::vector<std::array<int, 3>> kept;
    std::map<std::pair<int, int>, std::set<int>> edge_assign; // (apex-edge other vertex) -> polygon ids
    for (const auto& tri : in.triangles) {
        bool affected = tri[0] == apex || tri[1] == apex || tri[2] == apex;
        if (!affected) {
            kept.push_back(tri);
            continue;
        }
        Vec3 centroid = (in.vertices[static_cast<std::size_t>(tri[0])] +
                         in.vertices[static_cast<std::size_t>(tri[1])] +
                         in.vertices[static_cast<std::size_t>(tri[2])]) /
                        3.0;
        Vec3 cu = normalized(centroid);
        int best = 0;
        double best_dot = -2.0;
        for (int j = 0; j < m; ++j) {
            double dj = dot(cu, normalized(split.polygon[static_cast<std::size_t>(j)]));
            if (dj > best_dot + 1e-12) {
                best_dot = dj;
                best = j;
            }
        }
        std::array<int, 3> mapped = tri;
        for (auto& v : mapped)
            if (v == apex) v = poly[static_cast<std::size_t>(best)];
        kept.push_back(mapped);
        for (int v : tri)
            if (v != apex) edge_assign[{apex, v}].insert(best);
    }
    mesh.triangles = std::move(kept);

    for (const auto& [edge, ids] : edge_assign) {
        if (ids.size() < 2) continue;
        // walk the polygon the short way between the outermost assignments
        std::vector<int> sorted(ids.begin(), ids.end());
        for (std::size_t s = 0; s + 1 < sorted.size(); ++s) {
            int from = sorted[s], to = sorted[s + 1];
            int fwd = (to - from + m) % m, back = (from - to + m) % m;
            int steps = std::min(fwd, back);
            int dir = fwd <= back ? 1 : -1;
            int at = from;
            for (int q = 0; q < steps; ++q) {
                int nx = (at + dir + m) % m;
                mesh.triangles.push_back({poly[static_cast<std::size_t>(at)],
                                          poly[static_cast<std::size_t>(nx)], edge.second});
                at = nx;
            }
        }
    }

    if (split.origin_facet) {
        for (int j = 0; j < m; ++j)
            mesh.triangles.push_back({apex, poly[static_cast<std::size_t>(j)],
                                      poly[static_cast<std::size_t>((j + 1) % m)]});
    } else {
        for (int j = 1; j + 1 < m; ++j)
            mesh.triangles.push_back({poly[0], poly[static_cast<std::size_t>(j)],
                                      poly[static_cast<std::size_t>(j + 1)]});
    }

    TaggedMesh out = compacted(mesh);
    out.validate();
    return out;
}

// ---- non-minimal cone fold complexes (unit-ball window) ----

Vec3 tilted_spine(double phi, double az) { return rotz(az, {std::cos(phi), 0.0, std::sin(phi)}); }

Vec3 trace_ray(double phi, double az, int side) {
    return rotz(az, normalized({1.0, side * std::sqrt(3.0) * std::sin(phi), 0.0}));
}

std::vector<FoldPatch> patches_y_plus_ky(double phi, int sloping_count) {
    if (!(phi > 0.0 && phi < kPi / 2.0))
        throw std::domain_error("tilt must lie in (0, pi/2)");
    Vec3 zhat{0.0, 0.0, 1.0};
    std::vector<FoldPatch> ps;
    std::vector<double> az;
    for (int s = 0; s < sloping_count; ++s) az.push_back(2.0 * kPi / 3.0 * s);
    for (int s = 0; s < sloping_count; ++s) {
        double a = az[static_cast<std::size_t>(s)];
        Vec3 spine = tilted_spine(phi, a);
        ps.push_back(wedge_between(spine, zhat, "wedge_" + std::to_string(s)));
        ps.push_back(wedge_between(trace_ray(phi, a, +1), spine, "slope_p" + std::to_string(s)));
        ps.push_back(wedge_between(trace_ray(phi, a, -1), spine, "slope_m" + std::to_string(s)));
    }
    for (int s = sloping_count; s < 3; ++s) {
        double a = 2.0 * kPi / 3.0 * s;
        ps.push_back(wedge_between(rotz(a, {1.0, 0.0, 0.0}), zhat, "vert_" + std::to_string(s)));
    }
    // covered boundary sectors between consecutive structures
    for (int s = 0; s < 3; ++s) {
        int nx = (s + 1) % 3;
        Vec3 from = s < sloping_count ? trace_ray(phi, az[static_cast<std::size_t>(s)], +1)
                                      : rotz(2.0 * kPi / 3.0 * s, {1.0, 0.0, 0.0});
        Vec3 to = nx < sloping_count ? trace_ray(phi, az[static_cast<std::size_t>(nx)], -1)
                                     : rotz(2.0 * kPi / 3.0 * nx, {1.0, 0.0, 0.0});
        ps.push_back(gamma_wedge(from, to, "cover_" + std::to_string(s)));
    }
    return ps;
}

std::vector<FoldPatch> patches_t_plus_y(double phi) {
    if (!(std::sin(phi) > 0.0 && std::sin(phi) < 1.0 / 3.0))
        throw std::domain_error("t-plus-y: need 0 < sin(phi) < 1/3");
    auto v = t_plus_vertices();
    Vec3 spine = tilted_spine(phi, 0.0);
    std::vector<FoldPatch> ps;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            ps.push_back(wedge_between(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)],
                                       "slope_" + std::to_string(i) + std::to_string(j)));
    Vec3 f2 = normalized({v[1].x, v[1].y, 0.0});
    Vec3 f3 = normalized({v[2].x, v[2].y, 0.0});
    ps.push_back(wedge_between(f2, v[1], "wall_1"));
    ps.push_back(wedge_between(f3, v[2], "wall_2"));
    ps.push_back(wedge_between(spine, v[0], "wall_upper"));
    ps.push_back(wedge_between(trace_ray(phi, 0.0, +1), spine, "yslope_p"));
    ps.push_back(wedge_between(trace_ray(phi, 0.0, -1), spine, "yslope_m"));
    ps.push_back(gamma_wedge(trace_ray(phi, 0.0, +1), f2, "cover_0"));
    ps.push_back(gamma_wedge(f2, f3, "cover_1"));
    ps.push_back(gamma_wedge(f3, trace_ray(phi, 0.0, -1), "cover_2"));
    return ps;
}

struct RectangleCone {
    std::vector<FoldPatch> patches;
    double matched_alpha = 0.0;
    double foot_azimuth = 0.0;
    Vec3 corner;
};

Vec3 tangent_toward(const Vec3& p, const Vec3& q) { return normalized(q - p * dot(p, q)); }

RectangleCone rectangle_cone(double chi) {
    if (!(chi > 0.05 && chi < kPi / 2.0 - 0.05))
        throw std::domain_error("rectangle: corner azimuth out of range");
    // corner (sin t cos chi, sin t sin chi, cos t); polar angle t solves the
    // 120-degree closure between the two roof-edge tangents
    auto corner_at = [&](double t) {
        return Vec3{std::sin(t) * std::cos(chi), std::sin(t) * std::sin(chi), std::cos(t)};
    };
    auto closure = [&](double t) {
        Vec3 c = corner_at(t);
        Vec3 cx{-c.x, c.y, c.z}, cy{c.x, -c.y, c.z};
        return dot(tangent_toward(c, cx), tangent_toward(c, cy)) + 0.5;
    };
    double lo = 0.05, hi = kPi / 2.0 - 0.05;
    double flo = closure(lo), fhi = closure(hi);
    if (flo * fhi > 0.0) throw std::domain_error("rectangle: no 120-degree corner for this azimuth");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((closure(mid) < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = closure(mid);
        } else {
            hi = mid;
        }
    }
    double t = 0.5 * (lo + hi);
    Vec3 c = corner_at(t);
    Vec3 cx{-c.x, c.y, c.z}, cy{c.x, -c.y, c.z};
    Vec3 radial = -normalized(tangent_toward(c, cx) + tangent_toward(c, cy));
    // descend the radial great circle to the equator
    double phi0 = std::atan2(radial.z, c.z);
    double s = phi0 + kPi / 2.0;
    if (!(s > 1e-9 && s < kPi)) s = phi0 - kPi / 2.0;
    Vec3 foot = c * std::cos(s) + radial * std::sin(s);
    if (std::abs(foot.z) > 1e-9) throw std::domain_error("rectangle: radial arc misses the equator");
    foot.z = 0.0;
    foot = normalized(foot);
    double psi = std::atan2(foot.y, foot.x);

    RectangleCone rc;
    rc.corner = c;
    rc.foot_azimuth = psi;
    Vec3 nr = normalized(cross(c, foot));
    rc.matched_alpha = std::abs(nr.z);

    auto mirror_x = [](const Vec3& v) { return Vec3{-v.x, v.y, v.z}; };
    auto mirror_y = [](const Vec3& v) { return Vec3{v.x, -v.y, v.z}; };
    std::vector<Vec3> corners = {c, mirror_x(c), mirror_x(mirror_y(c)), mirror_y(c)};
    std::vector<Vec3> feet = {foot, mirror_x(foot), mirror_x(mirror_y(foot)), mirror_y(foot)};
    RectangleCone out = rc;
    for (int e = 0; e < 4; ++e) {
        out.patches.push_back(wedge_between(corners[static_cast<std::size_t>(e)],
                                            corners[static_cast<std::size_t>((e + 1) % 4)],
                                            "roof_" + std::to_string(e)));
        out.patches.push_back(wedge_between(corners[static_cast<std::size_t>(e)],
                                            feet[static_cast<std::size_t>(e)],
                                            "radial_" + std::to_string(e)));
    }
    // covered sectors on the non-overhang side of each foot ray
    bool cover_about_y = chi < psi;
    if (cover_about_y) {
        out.patches.push_back(gamma_wedge(feet[0], feet[1], "cover_0"));
        out.patches.push_back(gamma_wedge(feet[2], feet[3], "cover_1"));
    } else {
        out.patches.push_back(gamma_wedge(feet[3], feet[0], "cover_0"));
        out.patches.push_back(gamma_wedge(feet[1], feet[2], "cover_1"));
    }
    return out;
}

std::vector<FoldPatch> patches_pentagon_prism() {
    std::vector<FoldPatch> ps;
    double h = std::sin(kPi / 5.0); // square lateral faces
    for (int k = 0; k < 5; ++k) {
        double a0 = kPi / 2.0 + 2.0 * kPi / 5.0 * k;
        double a1 = kPi / 2.0 + 2.0 * kPi / 5.0 * (k + 1);
        Vec3 v0 = normalized({std::cos(a0), std::sin(a0), h});
        Vec3 v1 = normalized({std::cos(a1), std::sin(a1), h});
        ps.push_back(wedge_between(v0, v1, "roof_" + std::to_string(k)));
        ps.push_back(wedge_between(Vec3{std::cos(a0), std::sin(a0), 0.0}, v0,
                                   "wall_" + std::to_string(k)));
    }
    return ps;
}

TaggedMesh mesh_preset(const std::vector<FoldPatch>& patches, int resolution, double grade) {
    WindowGeometry g;
    g.kind = WindowGeometry::Kind::Ball;
    g.ball_radius = 1.0;
    g.scale = 1.0;
    MeshOptions opt;
    opt.resolution = resolution;
    opt.grade = grade;
    TaggedMesh mesh = mesh_fold_patches(patches, g, opt);
    mesh.validate();
    return mesh;
}

double exact_energy(const std::vector<FoldPatch>& patches, double alpha) {
    WindowGeometry g;
    g.kind = WindowGeometry::Kind::Ball;
    g.ball_radius = 1.0;
    g.scale = 1.0;
    double off = 0.0, on = 0.0;
    for (const auto& p : patches) (p.on_gamma ? on : off) += patch_window_area(p, g);
    return off + alpha * on;
}

double matched_alpha_for_tilt(double phi) { return std::sqrt(3.0) / 2.0 * std::cos(phi); }

} // namespace

std::string pinch_preset_name(PinchPreset preset) {
    switch (preset) {
        case PinchPreset::Identity: return "identity";
        case PinchPreset::TPlusFat: return "t-plus";
        case PinchPreset::TPlusY: return "t-plus-y";
        case PinchPreset::YPlusY: return "y-plus-y";
        case PinchPreset::YPlus2YLow: return "y-plus-2y-low";
        case PinchPreset::YPlus2YHigh: return "y-plus-2y-high";
        case PinchPreset::YPlus3YLow: return "y-plus-3y-low";
        case PinchPreset::YPlus3YHigh: return "y-plus-3y-high";
        case PinchPreset::CPlus: return "c-plus";
        case PinchPreset::Rectangle: return "rectangle";
        case PinchPreset::PentagonPrism: return "pentagon-prism";
    }
    return "?";
}

PinchPreset pinch_preset_from_name(const std::string& name) {
    for (PinchPreset p : {PinchPreset::Identity, PinchPreset::TPlusFat, PinchPreset::TPlusY,
                          PinchPreset::YPlusY, PinchPreset::YPlus2YLow, PinchPreset::YPlus2YHigh,
                          PinchPreset::YPlus3YLow, PinchPreset::YPlus3YHigh, PinchPreset::CPlus,
                          PinchPreset::Rectangle, PinchPreset::PentagonPrism})
        if (pinch_preset_name(p) == name) return p;
    throw std::invalid_argument("unknown pinch preset: " + name);
}

TaggedMesh pinch(const TaggedMesh& mesh, const PinchRecipe& recipe) {
    switch (recipe.preset) {
        case PinchPreset::Identity:
            return mesh;
        case PinchPreset::TPlusFat:
        case PinchPreset::TPlusY: {
            ApexSplit split;
            double apothem = recipe.eps;
            for (int j = 0; j < 3; ++j) {
                double az = 2.0 * kPi / 3.0 * j;
                split.polygon.push_back({2.0 * apothem * std::cos(az), 2.0 * apothem * std::sin(az), 0.0});
                split.tags.push_back(VertexTag::OnGamma);
            }
            split.origin_facet = true;
            return apex_split(mesh, split);
        }
        case PinchPreset::Rectangle: {
            RectangleCone rc = rectangle_cone(recipe.phi);
            ApexSplit split;
            for (double az : {rc.foot_azimuth, kPi - rc.foot_azimuth, kPi + rc.foot_azimuth,
                              -rc.foot_azimuth}) {
                split.polygon.push_back({recipe.eps * std::cos(az), recipe.eps * std::sin(az), 0.0});
                split.tags.push_back(VertexTag::OnGamma);
            }
            split.origin_facet = true;
            return apex_split(mesh, split);
        }
        case PinchPreset::CPlus:
        case PinchPreset::PentagonPrism:
        case PinchPreset::YPlusY:
        case PinchPreset::YPlus2YLow:
        case PinchPreset::YPlus3YLow: {
            // open the apex into a small sheet standing on the boundary
            // plane, facing the axis of the region pair that lacks an
            // interface
            Vec3 axis = recipe.preset == PinchPreset::PentagonPrism
                            ? rotz(kPi / 2.0 + kPi / 5.0, {1.0, 0.0, 0.0})
                            : Vec3{1.0, 0.0, 0.0};
            Vec3 t = normalized(cross({0.0, 0.0, 1.0}, axis));
            double e = recipe.eps;
            ApexSplit split;
            split.polygon = {t * -e, t * -e + Vec3{0, 0, e}, t * e + Vec3{0, 0, e}, t * e};
            split.tags = {VertexTag::OnGamma, VertexTag::Free, VertexTag::Free, VertexTag::OnGamma};
            split.origin_facet = false;
            return apex_split(mesh, split);
        }
        case PinchPreset::YPlus2YHigh:
            return gamma_pinch(mesh, trace_ray(recipe.phi, 0.0, +1),
                               trace_ray(recipe.phi, 2.0 * kPi / 3.0, -1), recipe.rho, recipe.eps);
        case PinchPreset::YPlus3YHigh: {
            TaggedMesh out = mesh;
            for (int s = 0; s < 3; ++s) {
                double a0 = 2.0 * kPi / 3.0 * s;
                double a1 = 2.0 * kPi / 3.0 * ((s + 1) % 3);
                out = gamma_pinch(out, trace_ray(recipe.phi, a0, +1), trace_ray(recipe.phi, a1, -1),
                                  recipe.rho, recipe.eps);
            }
            return out;
        }
    }
    throw std::logic_error("unreachable preset");
}

PresetFamily preset_family(PinchPreset preset, double phi, int resolution, double alpha) {
    PresetFamily fam;
    fam.name = pinch_preset_name(preset);
    fam.recipe.preset = preset;
    fam.recipe.phi = phi;
    fam.recipe.alpha = alpha;
    double grade = 1.0;

    std::vector<FoldPatch> patches;
    switch (preset) {
        case PinchPreset::TPlusFat: {
            patches = fold_patches(ConeSpec::t_plus());
            fam.matched_alpha = alpha;
            auto x0 = find_beating_competitor(alpha);
            fam.recipe.eps = x0 ? 0.8 * *x0 : 0.04;
            grade = 1.4;
            break;
        }
        case PinchPreset::TPlusY: {
            patches = patches_t_plus_y(phi);
            fam.matched_alpha = matched_alpha_for_tilt(phi);
            auto x0 = find_beating_competitor(fam.matched_alpha);
            fam.recipe.eps = x0 ? 0.8 * *x0 : 0.05;
            grade = 1.4;
            break;
        }
        case PinchPreset::YPlusY:
            patches = patches_y_plus_ky(phi, 1);
            fam.matched_alpha = matched_alpha_for_tilt(phi);
            fam.recipe.eps = 0.2;
            break;
        case PinchPreset::YPlus2YLow:
            patches = patches_y_plus_ky(phi, 2);
            fam.matched_alpha = matched_alpha_for_tilt(phi);
            fam.recipe.eps = 0.2;
            break;
        case PinchPreset::YPlus2YHigh:
            patches = patches_y_plus_ky(phi, 2);
            fam.matched_alpha = matched_alpha_for_tilt(phi);
            fam.recipe.rho = 0.15;
            fam.recipe.eps = 0.03;
            break;
        case PinchPreset::YPlus3YLow:
            patches = patches_y_plus_ky(phi, 3);
            fam.matched_alpha = matched_alpha_for_tilt(phi);
            fam.recipe.eps = 0.15;
            break;
        case PinchPreset::YPlus3YHigh:
            patches = patches_y_plus_ky(phi, 3);
            fam.matched_alpha = matched_alpha_for_tilt(phi);
            fam.recipe.rho = 0.15;
            fam.recipe.eps = 0.03;
            break;
        case PinchPreset::CPlus:
            patches = fold_patches(ConeSpec::c_plus());
            fam.matched_alpha = alpha;
            fam.recipe.eps = 0.2;
            break;
        case PinchPreset::Rectangle: {
            RectangleCone rc = rectangle_cone(phi);
            patches = rc.patches;
            fam.matched_alpha = rc.matched_alpha;
            fam.recipe.eps = 0.05;
            break;
        }
        case PinchPreset::PentagonPrism:
            patches = patches_pentagon_prism();
            fam.matched_alpha = alpha;
            fam.recipe.eps = 0.15;
            break;
        case PinchPreset::Identity:
            throw std::invalid_argument("preset_family: identity has no cone family");
    }
    fam.cone_mesh = mesh_preset(patches, resolution, grade);
    fam.cone_energy_exact = exact_energy(patches, fam.matched_alpha);
    return fam;
}

} // namespace slidingcones
