#pragma once

#include "slidingcones/foldcomplex.hpp"
#include "slidingcones/geom.hpp"
#include "slidingcones/mesh.hpp"
#include "slidingcones/onedim.hpp"

#include <string>
#include <vector>

// Symbolic constructors for the cone families plus mesh realizations
// clipped to a standard window.

namespace slidingcones {

enum class ConeFamily { Product1D, TPlus, YBeta, YBarBeta, WBeta, DeltaPlus, CPlus, Custom };

struct ConeSpec {
    ConeFamily family = ConeFamily::TPlus;
    Profile1D profile;      // Product1D
    double beta = 0.0;      // YBeta / YBarBeta / WBeta
    int n = 3;              // DeltaPlus
    std::string mesh_path;  // Custom

    static ConeSpec product(const Profile1D& p);
    static ConeSpec t_plus();
    static ConeSpec y_beta(double beta);
    static ConeSpec ybar_beta(double beta);
    static ConeSpec w_beta(double beta);
    static ConeSpec delta_plus(int n);
    static ConeSpec c_plus();
    static ConeSpec custom(const std::string& path);

    std::string family_name() const;
};

struct Window {
    enum class Kind { Ball, Simplex, Prism } kind = Kind::Ball;
    double radius = 1.0; // Ball only

    static Window ball(double r = 1.0) { return {Kind::Ball, r}; }
    static Window simplex() { return {Kind::Simplex, 1.0}; }
    static Window prism() { return {Kind::Prism, 1.0}; }
};

// One planar fold: unit plane normal oriented from region_a toward region_b,
// unit bounding rays (clipped to the half-space), Gamma flag.
struct Fold {
    VecN normal;
    std::vector<VecN> rays;
    bool on_gamma = false;
    int region_a = 0, region_b = 0; // 0 is the lower half-space
    std::string name;
};

struct FoldSet {
    std::vector<Fold> folds;
    int sloping_count() const;
    int vertical_count() const;
};

// gamma with cos(gamma) = (sqrt(3)/2) cos(beta): the angle the sloping folds
// of the tilted Y make with the boundary plane.
double gamma_from_beta(double beta);

// Complete planar-fold decomposition of an analytic family.
FoldSet folds(const ConeSpec& spec);

// Vertices of the tetrahedron generating T_plus (unit, apex down).
std::vector<Vec3> t_plus_vertices();

// Internal fold-patch realization (3-D families only).
std::vector<FoldPatch> fold_patches(const ConeSpec& spec);
WindowGeometry window_geometry(const ConeSpec& spec, const Window& window);

TaggedMesh build_mesh(const ConeSpec& spec, const Window& window, int resolution,
                      double grade = 1.0);

// Prism height multiple used for the Y-family window (times circumradius).
double y_prism_height_multiple();

} // namespace slidingcones
