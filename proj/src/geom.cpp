#include "slidingcones/geom.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slidingcones {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
    return v / n;
}

double dot(const VecN& a, const VecN& b) {
    if (a.size() != b.size()) throw std::invalid_argument("VecN dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const VecN& v) { return std::sqrt(dot(v, v)); }

VecN sub(const VecN& a, const VecN& b) {
    if (a.size() != b.size()) throw std::invalid_argument("VecN dimension mismatch");
    VecN r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecN scale(const VecN& v, double s) {
    VecN r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

Vec3 Mat3::apply(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

double Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<VecN> simplex_vertices(int n) {
    if (n < 2) throw std::domain_error("simplex_vertices: n must be >= 2, got " + std::to_string(n));
    std::vector<VecN> vertices(static_cast<std::size_t>(n) + 1, VecN(static_cast<std::size_t>(n), 0.0));
    // Shared prefix of the rows below the current diagonal. Row k is the
    // prefix followed by a negative diagonal entry p_kk fixed by |p_k| = 1;
    // the centering condition makes the entry below it -p_kk/(n-k+1).
    VecN prefix;
    double prefix_sq = 0.0;
    for (int k = 0; k < n; ++k) {
        double diag = -std::sqrt(1.0 - prefix_sq);
        for (int c = 0; c < k; ++c) vertices[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = prefix[static_cast<std::size_t>(c)];
        vertices[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = diag;
        double next = -diag / static_cast<double>(n - k);
        prefix.push_back(next);
        prefix_sq += next * next;
    }
    // Last vertex: full prefix with the final component mirrored positive.
    for (int c = 0; c < n; ++c) vertices[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)] = prefix[static_cast<std::size_t>(c)];
    vertices[static_cast<std::size_t>(n)][static_cast<std::size_t>(n) - 1] =
        -vertices[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1];
    return vertices;
}

double edge_length(int n) {
    if (n < 2) throw std::domain_error("edge_length: n must be >= 2, got " + std::to_string(n));
    return std::sqrt(2.0 * (n + 1) / static_cast<double>(n));
}

double edge_orthogonality_defect(const std::vector<VecN>& vertices, int i, int j) {
    int count = static_cast<int>(vertices.size());
    if (i < 1 || j < 1 || i >= j || j > count)
        throw std::out_of_range("edge_orthogonality_defect: need 1 <= i < j <= n+1");
    VecN edge = sub(vertices[static_cast<std::size_t>(i - 1)], vertices[static_cast<std::size_t>(j - 1)]);
    double worst = 0.0;
    for (int k = 1; k <= count; ++k) {
        if (k == i || k == j) continue;
        worst = std::max(worst, std::abs(dot(edge, vertices[static_cast<std::size_t>(k - 1)])));
    }
    return worst;
}

double edge_orthogonality_defect(int n, int i, int j) {
    return edge_orthogonality_defect(simplex_vertices(n), i, j);
}

Mat3 rotation_beta(double beta) {
    if (!(beta >= 0.0 && beta <= std::acos(-1.0) / 2.0 + 1e-15))
        throw std::domain_error("rotation_beta: beta must lie in [0, pi/2]");
    double s = std::sin(beta), c = std::cos(beta);
    Mat3 r;
    r.m = {{{s, 0.0, c}, {0.0, 1.0, 0.0}, {-c, 0.0, s}}};
    return r;
}

Mat3 reflection_x() {
    Mat3 r;
    r.m = {{{-1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    return r;
}

bool is_special_orthogonal(const Mat3& r, double tol) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += r.m[k][i] * r.m[k][j];
            double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - expect) > tol) return false;
        }
    }
    return std::abs(r.det() - 1.0) <= tol;
}

} // namespace slidingcones
