#include "slidingcones/cones.hpp"

#include <cmath>
#include <stdexcept>

namespace slidingcones {

namespace {

constexpr double kPi = 3.14159265358979323846;

VecN to_vecn(const Vec3& v) { return {v.x, v.y, v.z}; }

void check_beta(double beta) {
    if (!(beta >= 0.0 && beta <= kPi / 2.0 + 1e-15))
        throw std::domain_error("beta must lie in [0, pi/2]");
}

Fold make_fold(const Vec3& normal, std::vector<Vec3> rays, bool on_gamma, int a, int b,
               const std::string& name) {
    Fold f;
    f.normal = to_vecn(normalized(normal));
    for (const auto& r : rays) f.rays.push_back(to_vecn(normalized(r)));
    f.on_gamma = on_gamma;
    f.region_a = a;
    f.region_b = b;
    f.name = name;
    return f;
}

} // namespace

ConeSpec ConeSpec::product(const Profile1D& p) {
    ConeSpec s;
    s.family = ConeFamily::Product1D;
    s.profile = p;
    return s;
}
ConeSpec ConeSpec::t_plus() { return {ConeFamily::TPlus, {}, 0.0, 3, {}}; }
ConeSpec ConeSpec::y_beta(double beta) {
    check_beta(beta);
    return {ConeFamily::YBeta, {}, beta, 3, {}};
}
ConeSpec ConeSpec::ybar_beta(double beta) {
    check_beta(beta);
    return {ConeFamily::YBarBeta, {}, beta, 3, {}};
}
ConeSpec ConeSpec::w_beta(double beta) {
    check_beta(beta);
    return {ConeFamily::WBeta, {}, beta, 3, {}};
}
ConeSpec ConeSpec::delta_plus(int n) {
    if (n < 3) throw std::domain_error("delta_plus: n must be >= 3");
    return {ConeFamily::DeltaPlus, {}, 0.0, n, {}};
}
ConeSpec ConeSpec::c_plus() { return {ConeFamily::CPlus, {}, 0.0, 3, {}}; }
ConeSpec ConeSpec::custom(const std::string& path) {
    ConeSpec s;
    s.family = ConeFamily::Custom;
    s.mesh_path = path;
    return s;
}

std::string ConeSpec::family_name() const {
    switch (family) {
        case ConeFamily::Product1D: return "product-1d";
        case ConeFamily::TPlus: return "t-plus";
        case ConeFamily::YBeta: return "y-beta";
        case ConeFamily::YBarBeta: return "ybar-beta";
        case ConeFamily::WBeta: return "w-beta";
        case ConeFamily::DeltaPlus: return "delta-plus";
        case ConeFamily::CPlus: return "c-plus";
        case ConeFamily::Custom: return "custom";
    }
    return "?";
}

double gamma_from_beta(double beta) {
    check_beta(beta);
    return std::acos(std::sqrt(3.0) / 2.0 * std::cos(beta));
}

double y_prism_height_multiple() { return 4.0; }

int FoldSet::sloping_count() const {
    int c = 0;
    for (const auto& f : folds)
        if (!f.on_gamma && std::abs(f.normal.back()) > 1e-12) ++c;
    return c;
}

int FoldSet::vertical_count() const {
    int c = 0;
    for (const auto& f : folds)
        if (!f.on_gamma && std::abs(f.normal.back()) <= 1e-12) ++c;
    return c;
}

std::vector<Vec3> t_plus_vertices() {
    double r23 = std::sqrt(2.0 / 3.0);
    return {{2.0 * std::sqrt(2.0) / 3.0, 0.0, 1.0 / 3.0},
            {-std::sqrt(2.0) / 3.0, r23, 1.0 / 3.0},
            {-std::sqrt(2.0) / 3.0, -r23, 1.0 / 3.0},
            {0.0, 0.0, -1.0}};
}

namespace {

Vec3 horizontal_foot(const Vec3& v) { return normalized({v.x, v.y, 0.0}); }

FoldSet folds_t_plus() {
    auto v = t_plus_vertices();
    double scale = std::sqrt(3.0 / 8.0);
    FoldSet fs;
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            int k = -1, l = -1;
            for (int m = 1; m <= 4; ++m) {
                if (m == i || m == j) continue;
                (k < 0 ? k : l) = m;
            }
            Vec3 normal = (v[static_cast<std::size_t>(i - 1)] - v[static_cast<std::size_t>(j - 1)]) * scale;
            std::vector<Vec3> rays;
            if (j == 4) {
                rays = {v[static_cast<std::size_t>(k - 1)], v[static_cast<std::size_t>(l - 1)]};
            } else {
                // one generator is v4: clipped to the half-space the fold is
                // bounded by the remaining top ray and its horizontal foot
                int top = (k == 4) ? l : k;
                rays = {v[static_cast<std::size_t>(top - 1)], horizontal_foot(v[static_cast<std::size_t>(top - 1)])};
            }
            fs.folds.push_back(make_fold(normal, rays, false, i, j,
                                         "fold_" + std::to_string(i) + std::to_string(j)));
        }
    }
    return fs;
}

struct YFrame {
    Vec3 spine;            // R_beta(z)
    Vec3 q2, q3;           // Gamma trace directions of the sloping folds
    double beta;
};

YFrame y_frame(double beta) {
    YFrame f;
    f.beta = beta;
    f.spine = {std::cos(beta), 0.0, std::sin(beta)};
    double s = std::sqrt(3.0) * std::sin(beta);
    f.q2 = normalized({-1.0, s, 0.0});
    f.q3 = normalized({-1.0, -s, 0.0});
    return f;
}

Vec3 rot_beta(double beta, const Vec3& v) { return rotation_beta(beta).apply(v); }

FoldSet folds_y_beta(double beta) {
    YFrame f = y_frame(beta);
    FoldSet fs;
    fs.folds.push_back(make_fold(rot_beta(beta, {0.0, 1.0, 0.0}),
                                 {{1.0, 0.0, 0.0}, f.spine}, false, 2, 3, "vertical"));
    fs.folds.push_back(make_fold(rot_beta(beta, {-std::sqrt(3.0) / 2.0, -0.5, 0.0}),
                                 {f.q2, f.spine}, false, 3, 1, "sloping_2"));
    fs.folds.push_back(make_fold(rot_beta(beta, {-std::sqrt(3.0) / 2.0, 0.5, 0.0}),
                                 {f.q3, f.spine}, false, 2, 1, "sloping_3"));
    if (std::sin(beta) > 1e-12)
        fs.folds.push_back(make_fold({0.0, 0.0, 1.0}, {f.q2, f.q3}, true, 0, 1, "sector_S"));
    return fs;
}

FoldSet folds_ybar_beta(double beta) {
    FoldSet fs;
    Vec3 spine{std::cos(beta), 0.0, std::sin(beta)};
    double s = std::sqrt(3.0) * std::sin(beta);
    Vec3 q2 = normalized({1.0, -s, 0.0});
    Vec3 q3 = normalized({1.0, s, 0.0});
    fs.folds.push_back(make_fold(rot_beta(beta, {0.0, -1.0, 0.0}),
                                 {{-1.0, 0.0, 0.0}, spine}, false, 2, 3, "vertical"));
    fs.folds.push_back(make_fold(rot_beta(beta, {-std::sqrt(3.0) / 2.0, -0.5, 0.0}),
                                 {q2, spine}, false, 1, 3, "sloping_2"));
    fs.folds.push_back(make_fold(rot_beta(beta, {-std::sqrt(3.0) / 2.0, 0.5, 0.0}),
                                 {q3, spine}, false, 1, 2, "sloping_3"));
    fs.folds.push_back(make_fold({0.0, 0.0, 1.0}, {q3, {-1.0, 0.0, 0.0}}, true, 0, 2, "sector_Sbar_plus"));
    fs.folds.push_back(make_fold({0.0, 0.0, 1.0}, {{-1.0, 0.0, 0.0}, q2}, true, 0, 3, "sector_Sbar_minus"));
    return fs;
}

FoldSet folds_w_beta(double beta) {
    double sb = std::sin(beta), cb = std::cos(beta);
    double rs = std::sqrt(3.0) / 2.0;
    Vec3 s1{cb, 0.0, sb}, s2{-cb, 0.0, sb};
    double t = std::sqrt(3.0) * sb;
    Vec3 q1 = normalized({1.0, t, 0.0}), q2 = normalized({1.0, -t, 0.0});
    Vec3 q3 = normalized({-1.0, t, 0.0}), q4 = normalized({-1.0, -t, 0.0});
    FoldSet fs;
    fs.folds.push_back(make_fold({0.0, -1.0, 0.0}, {s1, s2}, false, 3, 4, "V"));
    fs.folds.push_back(make_fold({-rs * sb, 0.5, rs * cb}, {q1, s1}, false, 1, 3, "S1"));
    fs.folds.push_back(make_fold({-rs * sb, -0.5, rs * cb}, {q2, s1}, false, 1, 4, "S2"));
    fs.folds.push_back(make_fold({rs * sb, -0.5, rs * cb}, {q3, s2}, false, 2, 4, "S3"));
    fs.folds.push_back(make_fold({rs * sb, 0.5, rs * cb}, {q4, s2}, false, 2, 3, "S4"));
    fs.folds.push_back(make_fold({0.0, 0.0, 1.0}, {q1, q3}, true, 0, 3, "H1"));
    fs.folds.push_back(make_fold({0.0, 0.0, 1.0}, {q4, q2}, true, 0, 4, "H2"));
    return fs;
}

FoldSet folds_delta_plus(int n) {
    auto p = simplex_vertices(n);
    double ell = edge_length(n);
    FoldSet fs;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) {
            Fold f;
            f.normal = scale(sub(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]), 1.0 / ell);
            for (int k = 1; k <= n + 1; ++k)
                if (k != i && k != j) f.rays.push_back(p[static_cast<std::size_t>(k - 1)]);
            f.on_gamma = false;
            f.region_a = i;
            f.region_b = j;
            f.name = "fold_" + std::to_string(i) + "_" + std::to_string(j);
            fs.folds.push_back(std::move(f));
        }
    }
    return fs;
}

std::vector<Vec3> c_plus_corners() {
    double s = 1.0 / std::sqrt(3.0);
    return {{s, s, s}, {-s, s, s}, {-s, -s, s}, {s, -s, s}};
}

FoldSet folds_c_plus() {
    auto c = c_plus_corners();
    FoldSet fs;
    // regions: 1 above the roofs, 2..5 the side regions around +x, +y, -x, -y;
    // roof e spans corners e, e+1 and borders side region e+... (+y first)
    const int roof_side[4] = {3, 4, 5, 2};
    const int wall_sides[4][2] = {{2, 3}, {3, 4}, {4, 5}, {5, 2}};
    for (int e = 0; e < 4; ++e) {
        const Vec3& a = c[static_cast<std::size_t>(e)];
        const Vec3& b = c[static_cast<std::size_t>((e + 1) % 4)];
        Vec3 n = normalized(cross(a, b));
        if (n.z < 0.0) n = -n;
        fs.folds.push_back(make_fold(n, {a, b}, false, roof_side[e], 1, "roof_" + std::to_string(e)));
    }
    for (int e = 0; e < 4; ++e) {
        const Vec3& a = c[static_cast<std::size_t>(e)];
        Vec3 foot = horizontal_foot(a);
        Vec3 n = normalized(cross(a, foot));
        // orient counterclockwise: from the side region before the corner to the one after
        if (dot(n, {-foot.y, foot.x, 0.0}) < 0.0) n = -n;
        fs.folds.push_back(make_fold(n, {a, foot}, false, wall_sides[e][0], wall_sides[e][1],
                                     "wall_" + std::to_string(e)));
    }
    return fs;
}

FoldSet folds_product(const Profile1D& profile) {
    auto branches = profile_branches(profile);
    FoldSet fs;
    int region = 1;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& b = branches[i];
        Vec3 dir{std::cos(b.angle), 0.0, std::sin(b.angle)};
        Vec3 n = normalized(cross({0.0, 1.0, 0.0}, dir));
        int a = region, nb = branches.size() == 1 ? region : region + 1;
        if (i + 1 == branches.size()) nb = 1;
        fs.folds.push_back(make_fold(n, {{0.0, 1.0, 0.0}, dir}, b.in_gamma, a, nb,
                                     "branch_" + std::to_string(i)));
        ++region;
    }
    return fs;
}

} // namespace

FoldSet folds(const ConeSpec& spec) {
    switch (spec.family) {
        case ConeFamily::TPlus: return folds_t_plus();
        case ConeFamily::YBeta: return folds_y_beta(spec.beta);
        case ConeFamily::YBarBeta: return folds_ybar_beta(spec.beta);
        case ConeFamily::WBeta: return folds_w_beta(spec.beta);
        case ConeFamily::DeltaPlus: return folds_delta_plus(spec.n);
        case ConeFamily::CPlus: return folds_c_plus();
        case ConeFamily::Product1D: return folds_product(spec.profile);
        case ConeFamily::Custom:
            throw std::invalid_argument("folds: unsupported for custom meshes");
    }
    throw std::logic_error("unreachable");
}

namespace {

std::vector<FoldPatch> patches_t_plus() {
    auto v = t_plus_vertices();
    std::vector<FoldPatch> ps;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            ps.push_back(wedge_between(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)],
                                       "slope_" + std::to_string(i) + std::to_string(j)));
    for (int i = 0; i < 3; ++i)
        ps.push_back(wedge_between(horizontal_foot(v[static_cast<std::size_t>(i)]),
                                   v[static_cast<std::size_t>(i)], "wall_" + std::to_string(i)));
    return ps;
}

std::vector<FoldPatch> patches_y_beta(double beta) {
    YFrame f = y_frame(beta);
    std::vector<FoldPatch> ps;
    if (beta > 1e-12) ps.push_back(wedge_between({1.0, 0.0, 0.0}, f.spine, "vertical"));
    // the sloping folds become half-planes through the rotated generators
    // when their trace ray runs against the spine
    auto slope = [&](const Vec3& q, const Vec3& generator, const std::string& name) {
        if (std::abs(dot(normalized(q), f.spine) + 1.0) < 1e-12)
            return half_plane(q, rot_beta(beta, generator), name);
        return wedge_between(q, f.spine, name);
    };
    ps.push_back(slope(f.q2, {-0.5, std::sqrt(3.0) / 2.0, 0.0}, "sloping_2"));
    ps.push_back(slope(f.q3, {-0.5, -std::sqrt(3.0) / 2.0, 0.0}, "sloping_3"));
    if (std::sin(beta) > 1e-12) {
        auto sector = gamma_wedge(f.q2, f.q3, "sector_S");
        sector.on_gamma = true;
        ps.push_back(sector);
    }
    return ps;
}

std::vector<FoldPatch> patches_ybar_beta(double beta) {
    Vec3 spine{std::cos(beta), 0.0, std::sin(beta)};
    double s = std::sqrt(3.0) * std::sin(beta);
    Vec3 q2 = normalized({1.0, -s, 0.0});
    Vec3 q3 = normalized({1.0, s, 0.0});
    Vec3 minus_x{-1.0, 0.0, 0.0};
    std::vector<FoldPatch> ps;
    if (beta < kPi / 2.0 - 1e-12)
        ps.push_back(beta > 1e-12 ? wedge_between(minus_x, spine, "vertical")
                                  : half_plane(minus_x, {0.0, 0.0, 1.0}, "vertical"));
    else
        ps.push_back(wedge_between(minus_x, spine, "vertical"));
    if (std::sin(beta) > 1e-12) {
        ps.push_back(wedge_between(q2, spine, "sloping_2"));
        ps.push_back(wedge_between(q3, spine, "sloping_3"));
    }
    auto sp = gamma_wedge(q3, minus_x, "sector_Sbar_plus");
    auto sm = gamma_wedge(minus_x, q2, "sector_Sbar_minus");
    ps.push_back(sp);
    ps.push_back(sm);
    return ps;
}

std::vector<FoldPatch> patches_w_beta(double beta) {
    double sb = std::sin(beta), cb = std::cos(beta);
    Vec3 s1{cb, 0.0, sb}, s2{-cb, 0.0, sb};
    double t = std::sqrt(3.0) * sb;
    Vec3 q1 = normalized({1.0, t, 0.0}), q2 = normalized({1.0, -t, 0.0});
    Vec3 q3 = normalized({-1.0, t, 0.0}), q4 = normalized({-1.0, -t, 0.0});
    std::vector<FoldPatch> ps;
    ps.push_back(sb > 1e-12 ? wedge_between(s1, s2, "V") : half_plane(s1, {0.0, 0.0, 1.0}, "V"));
    if (sb > 1e-12) {
        // at beta = 0 the sloping faces collapse into the vertical one
        ps.push_back(wedge_between(q1, s1, "S1"));
        ps.push_back(wedge_between(q2, s1, "S2"));
        ps.push_back(wedge_between(q3, s2, "S3"));
        ps.push_back(wedge_between(q4, s2, "S4"));
    }
    if (sb > 1e-12) {
        ps.push_back(gamma_wedge(q1, q3, "H1"));
        ps.push_back(gamma_wedge(q4, q2, "H2"));
    } else {
        // beta = 0: q1=q2=+x and q3=q4=-x, the horizontal faces are the two
        // half-planes of Gamma
        auto h1 = half_plane({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, "H1");
        h1.on_gamma = true;
        auto h2 = half_plane({-1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, "H2");
        h2.on_gamma = true;
        ps.push_back(h1);
        ps.push_back(h2);
    }
    return ps;
}

std::vector<FoldPatch> patches_c_plus() {
    auto c = c_plus_corners();
    std::vector<FoldPatch> ps;
    for (int e = 0; e < 4; ++e) {
        ps.push_back(wedge_between(c[static_cast<std::size_t>(e)], c[static_cast<std::size_t>((e + 1) % 4)],
                                   "roof_" + std::to_string(e)));
        ps.push_back(wedge_between(horizontal_foot(c[static_cast<std::size_t>(e)]),
                                   c[static_cast<std::size_t>(e)], "wall_" + std::to_string(e)));
    }
    return ps;
}

std::vector<FoldPatch> patches_product(const Profile1D& profile) {
    std::vector<FoldPatch> ps;
    int i = 0;
    for (const auto& b : profile_branches(profile)) {
        Vec3 dir{std::cos(b.angle), 0.0, std::sin(b.angle)};
        auto p = half_plane({0.0, 1.0, 0.0}, dir, "branch_" + std::to_string(i++));
        p.on_gamma = b.in_gamma;
        ps.push_back(p);
    }
    return ps;
}

} // namespace

std::vector<FoldPatch> fold_patches(const ConeSpec& spec) {
    switch (spec.family) {
        case ConeFamily::TPlus: return patches_t_plus();
        case ConeFamily::YBeta: return patches_y_beta(spec.beta);
        case ConeFamily::YBarBeta: return patches_ybar_beta(spec.beta);
        case ConeFamily::WBeta: return patches_w_beta(spec.beta);
        case ConeFamily::CPlus: return patches_c_plus();
        case ConeFamily::Product1D: return patches_product(spec.profile);
        case ConeFamily::DeltaPlus:
            throw std::invalid_argument(
                "fold_patches: delta-plus has no 3-D mesh realization; use t-plus for n = 3");
        case ConeFamily::Custom:
            throw std::invalid_argument("fold_patches: unsupported for custom meshes");
    }
    throw std::logic_error("unreachable");
}

WindowGeometry window_geometry(const ConeSpec& spec, const Window& window) {
    WindowGeometry g;
    switch (window.kind) {
        case Window::Kind::Ball: {
            if (window.radius <= 0.0) throw std::domain_error("ball window needs radius > 0");
            g.kind = WindowGeometry::Kind::Ball;
            g.ball_radius = window.radius;
            g.scale = window.radius;
            return g;
        }
        case Window::Kind::Simplex: {
            if (spec.family != ConeFamily::TPlus)
                throw std::invalid_argument("simplex window is defined for the t-plus family");
            // prism over the shadow triangle of the three upper vertices
            auto v = t_plus_vertices();
            g.kind = WindowGeometry::Kind::Planes;
            for (int i = 0; i < 3; ++i) {
                Vec3 a = v[static_cast<std::size_t>(i)];
                Vec3 b = v[static_cast<std::size_t>((i + 1) % 3)];
                Vec3 edge{b.x - a.x, b.y - a.y, 0.0};
                Vec3 n = normalized({edge.y, -edge.x, 0.0});
                double d = n.x * a.x + n.y * a.y;
                if (d < 0.0) {
                    n = -n;
                    d = -d;
                }
                g.planes.emplace_back(n, d);
            }
            g.planes.emplace_back(Vec3{0.0, 0.0, 1.0}, 2.0); // unbinding cap
            g.scale = 2.0 * std::sqrt(2.0) / 3.0;
            return g;
        }
        case Window::Kind::Prism: {
            if (spec.family == ConeFamily::YBeta || spec.family == ConeFamily::YBarBeta) {
                g.kind = WindowGeometry::Kind::Planes;
                double beta = spec.beta;
                Vec3 spine{std::cos(beta), 0.0, std::sin(beta)};
                double rt = std::sqrt(3.0) / 2.0;
                bool bar = spec.family == ConeFamily::YBarBeta;
                std::vector<Vec3> face_normals = {{-1.0, 0.0, 0.0},
                                                  {0.5, -rt, 0.0},
                                                  {0.5, rt, 0.0}};
                for (auto& n : face_normals) {
                    if (bar) n = -n;
                    g.planes.emplace_back(rot_beta(beta, n), 0.5);
                }
                double h = y_prism_height_multiple() / 2.0;
                g.planes.emplace_back(spine, h);
                g.planes.emplace_back(-spine, h);
                g.scale = h;
                return g;
            }
            if (spec.family == ConeFamily::Product1D) {
                g.kind = WindowGeometry::Kind::Cylinder;
                g.cyl_radius = 1.0;
                g.planes.emplace_back(Vec3{0.0, -1.0, 0.0}, 0.0);
                g.planes.emplace_back(Vec3{0.0, 1.0, 0.0}, 1.0);
                for (const auto& b : profile_branches(spec.profile))
                    g.planes.emplace_back(Vec3{std::cos(b.angle), 0.0, std::sin(b.angle)}, 1.0);
                g.scale = 1.0;
                return g;
            }
            throw std::invalid_argument("prism window is defined for the Y families and products");
        }
    }
    throw std::logic_error("unreachable");
}

TaggedMesh build_mesh(const ConeSpec& spec, const Window& window, int resolution, double grade) {
    if (resolution < 1) throw std::domain_error("build_mesh: resolution must be >= 1");
    if (spec.family == ConeFamily::Custom) return read_tmesh_file(spec.mesh_path);
    auto patches = fold_patches(spec);
    auto geometry = window_geometry(spec, window);
    MeshOptions options;
    options.resolution = resolution;
    options.grade = grade;
    return mesh_fold_patches(patches, geometry, options);
}

} // namespace slidingcones
