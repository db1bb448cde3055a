#pragma once

#include "slidingcones/geom.hpp"
#include "slidingcones/mesh.hpp"

#include <string>
#include <vector>

// Planar fold patches with a common apex at the origin, their window
// clipping, and the welded triangulation shared by the analytic cone
// families and the evolver seeds.

namespace slidingcones {

// Patch = { r (cos t e1 + sin t e2) : r >= 0, t in [0, theta] }, a planar
// wedge in the plane spanned by the orthonormal pair (e1, e2).
struct FoldPatch {
    Vec3 e1, e2;
    double theta = 0.0; // in (0, pi]
    bool on_gamma = false;
    std::string name;

    Vec3 ray_start() const { return e1; }
    Vec3 ray_end() const;
    Vec3 plane_normal() const { return cross(e1, e2); }
    Vec3 direction(double t) const;
};

FoldPatch wedge_between(const Vec3& u1, const Vec3& u2, const std::string& name = {});
FoldPatch half_plane(const Vec3& u1, const Vec3& mid, const std::string& name = {});
// Wedge inside the boundary plane from u1 counterclockwise (about +z) to u2.
FoldPatch gamma_wedge(const Vec3& u1, const Vec3& u2, const std::string& name = {});

struct WindowGeometry {
    enum class Kind { Ball, Planes, Cylinder } kind = Kind::Ball;
    double ball_radius = 1.0;
    std::vector<std::pair<Vec3, double>> planes; // n . x <= d
    double cyl_radius = 1.0;                     // radius in the xz plane, y in [0, 1]
    double scale = 1.0;

    bool on_boundary(const Vec3& v, double tol) const;
};

struct MeshOptions {
    int resolution = 8;
    double grade = 1.0;      // ring radii ~ (j/res)^grade, >1 refines near the apex
    double weld_tol = 1e-7;
};

// Clipped area of one patch (exact: circular sector or clipped polygon).
double patch_window_area(const FoldPatch& patch, const WindowGeometry& window);

// Welded triangulation of all patches clipped to the window. Vertices on the
// window boundary come out Pinned, remaining vertices on {z = 0} OnGamma.
TaggedMesh mesh_fold_patches(const std::vector<FoldPatch>& patches,
                             const WindowGeometry& window, const MeshOptions& options);

} // namespace slidingcones
