#pragma once

#include <array>
#include <cstddef>
#include <vector>

// Vector/matrix primitives, canonical regular simplices and the tilt
// rotation R_beta shared by every cone construction.

namespace slidingcones {

using VecN = std::vector<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);

double dot(const VecN& a, const VecN& b);
double norm(const VecN& v);
VecN sub(const VecN& a, const VecN& b);
VecN scale(const VecN& v, double s);

// Column-major-free 3x3 matrix, m[r][c].
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    Vec3 apply(const Vec3& v) const;
    double det() const;
};

// Canonical unit regular simplex in R^n: barycenter at the origin, every
// vertex on the unit sphere, all diagonal components negative. Returns the
// n+1 vertices.
std::vector<VecN> simplex_vertices(int n);

// |p_i - p_j| = sqrt(2(n+1)/n) for the canonical simplex.
double edge_length(int n);

// max_{k not in {i,j}} |(p_i - p_j) . p_k| for 1-based vertex indices
// 1 <= i < j <= n+1; vanishes for canonical simplices.
double edge_orthogonality_defect(int n, int i, int j);
double edge_orthogonality_defect(const std::vector<VecN>& vertices, int i, int j);

// R_beta = [ sin b, 0, cos b; 0, 1, 0; -cos b, 0, sin b ], beta in [0, pi/2].
Mat3 rotation_beta(double beta);

// Reflection through the yz plane (determinant -1).
Mat3 reflection_x();

bool is_special_orthogonal(const Mat3& r, double tol = 1e-12);

} // namespace slidingcones
