#include "slidingcones/foldcomplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>

namespace slidingcones {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Vec3 FoldPatch::ray_end() const { return e1 * std::cos(theta) + e2 * std::sin(theta); }

Vec3 FoldPatch::direction(double t) const { return e1 * std::cos(t) + e2 * std::sin(t); }

FoldPatch wedge_between(const Vec3& u1, const Vec3& u2, const std::string& name) {
    Vec3 a = normalized(u1), b = normalized(u2);
    Vec3 n = cross(a, b);
    double s = norm(n), c = dot(a, b);
    if (s < 1e-12) throw std::invalid_argument("wedge_between: rays are collinear (" + name + ")");
    FoldPatch p;
    p.e1 = a;
    p.e2 = normalized(cross(normalized(n), a));
    p.theta = std::atan2(s, c);
    p.name = name;
    return p;
}

FoldPatch half_plane(const Vec3& u1, const Vec3& mid, const std::string& name) {
    Vec3 a = normalized(u1);
    Vec3 m = mid - a * dot(mid, a);
    if (norm(m) < 1e-12) throw std::invalid_argument("half_plane: mid direction on the boundary ray");
    FoldPatch p;
    p.e1 = a;
    p.e2 = normalized(m);
    p.theta = kPi;
    p.name = name;
    return p;
}

FoldPatch gamma_wedge(const Vec3& u1, const Vec3& u2, const std::string& name) {
    Vec3 a = normalized(u1), b = normalized(u2);
    if (std::abs(a.z) > 1e-12 || std::abs(b.z) > 1e-12)
        throw std::invalid_argument("gamma_wedge: rays must lie in the boundary plane");
    FoldPatch p;
    p.e1 = a;
    p.e2 = {-a.y, a.x, 0.0};
    double t = std::atan2(dot(b, p.e2), dot(b, p.e1));
    if (t <= 1e-12) t += 2.0 * kPi;
    if (t > kPi + 1e-9) throw std::invalid_argument("gamma_wedge: reflex sector, split it first");
    p.theta = t;
    p.on_gamma = true;
    p.name = name;
    return p;
}

bool WindowGeometry::on_boundary(const Vec3& v, double tol) const {
    switch (kind) {
        case Kind::Ball:
            return std::abs(norm(v) - ball_radius) <= tol;
        case Kind::Planes:
            for (const auto& [n, d] : planes)
                if (std::abs(dot(n, v) - d) <= tol) return true;
            return false;
        case Kind::Cylinder:
            return std::abs(v.y) <= tol || std::abs(v.y - 1.0) <= tol ||
                   std::abs(std::hypot(v.x, v.z) - cyl_radius) <= tol;
    }
    return false;
}

namespace {

struct Planar {
    double a = 0.0, b = 0.0; // in-plane coordinates along (e1, e2)
};

// In-plane half-plane constraints ca*a + cb*b <= d for the window.
std::vector<std::array<double, 3>> inplane_constraints(const FoldPatch& patch,
                                                       const WindowGeometry& window) {
    std::vector<std::array<double, 3>> cons;
    for (const auto& [n, d] : window.planes)
        cons.push_back({dot(n, patch.e1), dot(n, patch.e2), d});
    return cons;
}

std::vector<Planar> clip_polygon(std::vector<Planar> poly,
                                 const std::vector<std::array<double, 3>>& cons) {
    for (const auto& c : cons) {
        std::vector<Planar> next;
        std::size_t m = poly.size();
        for (std::size_t i = 0; i < m && m >= 3; ++i) {
            const Planar& p = poly[i];
            const Planar& q = poly[(i + 1) % m];
            double fp = c[0] * p.a + c[1] * p.b - c[2];
            double fq = c[0] * q.a + c[1] * q.b - c[2];
            bool in_p = fp <= 1e-12, in_q = fq <= 1e-12;
            if (in_p) next.push_back(p);
            if (in_p != in_q) {
                double t = fp / (fp - fq);
                next.push_back({p.a + t * (q.a - p.a), p.b + t * (q.b - p.b)});
            }
        }
        poly = std::move(next);
        if (poly.size() < 3) return {};
    }
    return poly;
}

std::vector<Planar> wedge_polygon(const FoldPatch& patch, double radius) {
    std::vector<Planar> poly;
    poly.push_back({0.0, 0.0});
    int arcs = 8;
    for (int i = 0; i <= arcs; ++i) {
        double t = patch.theta * i / arcs;
        // Circumscribe so the clipped window region is fully covered.
        double r = radius / std::cos(patch.theta / (2.0 * arcs));
        poly.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return poly;
}

double polygon_area(const std::vector<Planar>& poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Planar& p = poly[i];
        const Planar& q = poly[(i + 1) % poly.size()];
        s += p.a * q.b - q.a * p.b;
    }
    return 0.5 * std::abs(s);
}

// Boundary chain of the clipped region seen from the apex: the polygon
// boundary with the apex vertex removed.
std::vector<Planar> apex_chain(const std::vector<Planar>& poly) {
    std::size_t m = poly.size();
    std::size_t apex = m;
    double best = 1e300;
    for (std::size_t i = 0; i < m; ++i) {
        double r2 = poly[i].a * poly[i].a + poly[i].b * poly[i].b;
        if (r2 < best) {
            best = r2;
            apex = i;
        }
    }
    if (best > 1e-16)
        throw std::invalid_argument("fold patch region does not reach the apex");
    std::vector<Planar> chain;
    for (std::size_t k = 1; k < m; ++k) chain.push_back(poly[(apex + k) % m]);
    return chain;
}

std::vector<Planar> subdivide_chain(const std::vector<Planar>& chain, double target_h) {
    std::vector<Planar> out;
    out.push_back(chain.front());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const Planar& p = chain[i];
        const Planar& q = chain[i + 1];
        double len = std::hypot(q.a - p.a, q.b - p.b);
        int pieces = std::max(1, static_cast<int>(std::ceil(len / target_h)));
        for (int k = 1; k <= pieces; ++k) {
            double t = static_cast<double>(k) / pieces;
            out.push_back({p.a + t * (q.a - p.a), p.b + t * (q.b - p.b)});
        }
    }
    return out;
}

class Welder {
  public:
    explicit Welder(double tol) : tol_(tol) {}

    int add(TaggedMesh& mesh, const Vec3& pos, VertexTag tag) {
        Vec3 v = pos;
        if (std::abs(v.z) <= 1e-9) v.z = 0.0;
        auto key = std::make_tuple(quantize(v.x), quantize(v.y), quantize(v.z));
        auto it = index_.find(key);
        if (it != index_.end()) {
            int idx = it->second;
            auto& existing = mesh.tags[static_cast<std::size_t>(idx)];
            existing = std::max(existing, tag, [](VertexTag l, VertexTag r) {
                return priority(l) < priority(r);
            });
            return idx;
        }
        int idx = mesh.vertex_count();
        mesh.vertices.push_back(v);
        mesh.tags.push_back(tag);
        index_.emplace(key, idx);
        return idx;
    }

  private:
    static int priority(VertexTag t) {
        switch (t) {
            case VertexTag::Free: return 0;
            case VertexTag::OnGamma: return 1;
            case VertexTag::Pinned: return 2;
        }
        return 0;
    }
    std::int64_t quantize(double x) const {
        return static_cast<std::int64_t>(std::llround(x / tol_));
    }
    double tol_;
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, int> index_;
};

} // namespace

double patch_window_area(const FoldPatch& patch, const WindowGeometry& window) {
    if (window.kind == WindowGeometry::Kind::Ball)
        return 0.5 * patch.theta * window.ball_radius * window.ball_radius;
    auto poly = clip_polygon(wedge_polygon(patch, 4.0 * window.scale),
                             inplane_constraints(patch, window));
    return polygon_area(poly);
}

TaggedMesh mesh_fold_patches(const std::vector<FoldPatch>& patches,
                             const WindowGeometry& window, const MeshOptions& options) {
    if (options.resolution < 1) throw std::domain_error("mesh resolution must be >= 1");
    TaggedMesh mesh;
    Welder welder(options.weld_tol);
    double pin_tol = 1e-9 * std::max(1.0, window.scale);

    for (const auto& patch : patches) {
        std::vector<Planar> chain;
        if (window.kind == WindowGeometry::Kind::Ball) {
            double r = window.ball_radius;
            int arcs = std::max(2, static_cast<int>(std::ceil(patch.theta * r /
                                                              (window.scale / options.resolution))));
            for (int i = 0; i <= arcs; ++i) {
                double t = patch.theta * i / arcs;
                chain.push_back({r * std::cos(t), r * std::sin(t)});
            }
        } else {
            auto poly = clip_polygon(wedge_polygon(patch, 4.0 * window.scale),
                                     inplane_constraints(patch, window));
            if (poly.empty()) continue;
            double far = 0.0;
            for (const auto& p : poly) far = std::max(far, std::hypot(p.a, p.b));
            chain = subdivide_chain(apex_chain(poly), far / options.resolution);
        }

        auto lift = [&](const Planar& p) { return patch.e1 * p.a + patch.e2 * p.b; };
        auto tag_for = [&](const Vec3& v) {
            if (window.on_boundary(v, pin_tol)) return VertexTag::Pinned;
            if (std::abs(v.z) <= 1e-9) return VertexTag::OnGamma;
            return VertexTag::Free;
        };

        int res = options.resolution;
        std::vector<std::vector<int>> rings(static_cast<std::size_t>(res) + 1);
        Vec3 origin{0.0, 0.0, 0.0};
        int apex = welder.add(mesh, origin, tag_for(origin));
        rings[0] = std::vector<int>(chain.size(), apex);
        for (int j = 1; j <= res; ++j) {
            double f = std::pow(static_cast<double>(j) / res, options.grade);
            for (const auto& p : chain) {
                Vec3 v = lift({p.a * f, p.b * f});
                rings[static_cast<std::size_t>(j)].push_back(welder.add(mesh, v, tag_for(v)));
            }
        }
        for (int j = 0; j < res; ++j) {
            const auto& lo = rings[static_cast<std::size_t>(j)];
            const auto& hi = rings[static_cast<std::size_t>(j + 1)];
            for (std::size_t i = 0; i + 1 < hi.size(); ++i) {
                if (j == 0) {
                    mesh.triangles.push_back({apex, hi[i], hi[i + 1]});
                } else {
                    mesh.triangles.push_back({lo[i], hi[i], hi[i + 1]});
                    mesh.triangles.push_back({lo[i], hi[i + 1], lo[i + 1]});
                }
            }
        }
    }
    return compacted(mesh);
}

} // namespace slidingcones
