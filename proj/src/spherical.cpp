#include "slidingcones/spherical.hpp"

#include <cmath>
#include <stdexcept>

namespace slidingcones {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 rotate_about(const Vec3& axis, const Vec3& v, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
}

Vec3 mirror_y(const Vec3& v) { return {v.x, -v.y, v.z}; }

Vec3 geodesic_point(const Vec3& p, const Vec3& dir, double s) {
    return p * std::cos(s) + dir * std::sin(s);
}

Vec3 geodesic_tangent(const Vec3& p, const Vec3& dir, double s) {
    return p * (-std::sin(s)) + dir * std::cos(s);
}

// First parameter s > 0 where the geodesic from p along dir crosses z = 0
// going downward.
double arc_to_equator(const Vec3& p, const Vec3& dir) {
    double r = std::hypot(p.z, dir.z);
    if (r < 1e-14) throw std::domain_error("pentagon_family: radial arc runs parallel to the equator");
    double phi0 = std::atan2(dir.z, p.z);
    for (double s : {phi0 + kPi / 2.0, phi0 + 3.0 * kPi / 2.0, phi0 - kPi / 2.0}) {
        if (s > 1e-12 && s < kPi) {
            double slope = -p.z * std::sin(s) + dir.z * std::cos(s);
            if (slope < 0.0) return s;
        }
    }
    throw std::domain_error("pentagon_family: radial arc does not descend to the equator");
}

struct Junction {
    Vec3 pos;
    Vec3 back;  // unit tangent toward the previous vertex
    Vec3 next;  // unit tangent toward the next vertex
    Vec3 radial;
};

// Tangents at the end of an edge: back points to the start, next continues
// the polygon turning by +-60 degrees, radial is the remaining direction.
Junction junction_after_edge(const Vec3& start, const Vec3& dir, double len, double turn) {
    Junction j;
    j.pos = geodesic_point(start, dir, len);
    Vec3 fwd = geodesic_tangent(start, dir, len);
    j.back = -fwd;
    j.next = rotate_about(j.pos, fwd, turn);
    j.radial = rotate_about(j.pos, fwd, turn > 0 ? turn - 2.0 * kPi / 3.0 : turn + 2.0 * kPi / 3.0);
    return j;
}

double junction_residual(const Vec3& a, const Vec3& b) {
    return std::abs(std::acos(std::clamp(dot(a, b), -1.0, 1.0)) - 2.0 * kPi / 3.0);
}

} // namespace

double triangle_side() { return std::acos(-1.0 / 3.0); }

double rect_side(double a) {
    if (!(a > 0.0 && a < kPi)) throw std::domain_error("rect_side: side must lie in (0, pi)");
    double c = std::cos(a);
    double rhs = (3.0 - 5.0 * c) / (5.0 - 3.0 * c);
    if (rhs < -1.0 || rhs > 1.0) throw std::domain_error("rect_side: no spherical rectangle with this side");
    return std::acos(rhs);
}

double rect_side_half_angle(double a) {
    if (!(a > 0.0 && a < kPi)) throw std::domain_error("rect_side_half_angle: side must lie in (0, pi)");
    double s = std::sin(a / 2.0);
    double v = 2.0 * s / std::sqrt(1.0 + 3.0 * s * s);
    if (v < -1.0 || v > 1.0) throw std::domain_error("rect_side_half_angle: no solution");
    return 2.0 * std::acos(v);
}

double pentagon_side(double a, double b) {
    double rhs = (1.0 / 3.0 + std::cos(a) + std::cos(b) + std::cos(a) * std::cos(b) -
                  std::sin(a) * std::sin(b)) / 2.0;
    if (rhs < -1.0 || rhs > 1.0)
        throw std::domain_error("pentagon_side: no 120-degree pentagon side for these lengths");
    return std::acos(rhs);
}

namespace {

// The pentagon shape is rigid once gamma is fixed; build at a reference
// tilt and slide along the meridian for other values of beta.
struct PentagonShape {
    double zeta = 0.0, eps = 0.0, turn = 0.0;
    bool valid = false;
};

PentagonShape pentagon_shape_at(double gamma, double beta_ref, double zeta, double turn) {
    Vec3 a_pos{std::cos(beta_ref), 0.0, std::sin(beta_ref)};
    Vec3 t_beta{std::sin(beta_ref), 0.0, -std::cos(beta_ref)};
    Vec3 gamma_dir = t_beta * (-0.5) + Vec3{0.0, 1.0, 0.0} * (std::sqrt(3.0) / 2.0);
    Junction b = junction_after_edge(a_pos, gamma_dir, gamma, turn);
    Junction c = junction_after_edge(b.pos, b.next, zeta, turn);
    Vec3 d_expect = mirror_y(c.pos);
    double eps = std::acos(std::clamp(dot(c.pos, d_expect), -1.0, 1.0));
    PentagonShape s;
    s.zeta = zeta;
    s.eps = eps;
    s.turn = turn;
    s.valid = norm(geodesic_point(c.pos, c.next, eps) - d_expect) <= 1e-9 && c.pos.z > 1e-9 &&
              b.pos.z > 1e-9 && eps > 1e-6;
    return s;
}

// Mirror condition for the middle edge: the great circle from C along the
// next direction must be invariant under y -> -y.
double mirror_defect(double gamma, double beta_ref, double zeta, double turn) {
    Vec3 a_pos{std::cos(beta_ref), 0.0, std::sin(beta_ref)};
    Vec3 t_beta{std::sin(beta_ref), 0.0, -std::cos(beta_ref)};
    Vec3 gamma_dir = t_beta * (-0.5) + Vec3{0.0, 1.0, 0.0} * (std::sqrt(3.0) / 2.0);
    Junction b = junction_after_edge(a_pos, gamma_dir, gamma, turn);
    Junction c = junction_after_edge(b.pos, b.next, zeta, turn);
    return cross(c.pos, c.next).y;
}

PentagonShape solve_pentagon_shape(double gamma) {
    const double beta_ref = kPi / 4.0;
    PentagonShape best;
    for (double turn : {-kPi / 3.0, kPi / 3.0}) {
        const int scan = 2000;
        double prev_z = 0.0, prev_g = 0.0;
        bool have_prev = false;
        for (int i = 0; i <= scan; ++i) {
            double z = 0.02 + (2.6 - 0.02) * i / scan;
            double g = mirror_defect(gamma, beta_ref, z, turn);
            if (have_prev && (prev_g < 0.0) != (g < 0.0)) {
                double lo = prev_z, hi = z;
                for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if ((mirror_defect(gamma, beta_ref, mid, turn) < 0.0) == (prev_g < 0.0))
                        lo = mid;
                    else
                        hi = mid;
                }
                PentagonShape s = pentagon_shape_at(gamma, beta_ref, 0.5 * (lo + hi), turn);
                if (s.valid && (!best.valid ||
                                std::abs(s.zeta - gamma) < std::abs(best.zeta - gamma)))
                    best = s;
            }
            prev_z = z;
            prev_g = g;
            have_prev = true;
        }
    }
    if (!best.valid)
        throw std::domain_error("pentagon_family: no symmetric pentagon closes for this gamma");
    return best;
}

} // namespace

double pentagon_zeta(double gamma) {
    if (!(gamma > 0.0 && gamma < kPi))
        throw std::domain_error("pentagon_family: gamma must lie in (0, pi)");
    return solve_pentagon_shape(gamma).zeta;
}

ArcNet pentagon_family(double beta, double gamma) {
    if (!(beta > 0.0 && beta < kPi / 2.0))
        throw std::domain_error("pentagon_family: beta must lie in (0, pi/2)");
    if (!(gamma > 0.0 && gamma < kPi))
        throw std::domain_error("pentagon_family: gamma must lie in (0, pi)");

    PentagonShape shape = solve_pentagon_shape(gamma);
    double zeta = shape.zeta;
    double eps = shape.eps;

    Vec3 a_pos{std::cos(beta), 0.0, std::sin(beta)};
    Vec3 t_beta{std::sin(beta), 0.0, -std::cos(beta)}; // tangent at A toward its foot
    Vec3 y_hat{0.0, 1.0, 0.0};

    ArcNet net;
    double residual = 0.0;
    {
        double turn = shape.turn;
        Vec3 gamma_dir = t_beta * (-0.5) + y_hat * (std::sqrt(3.0) / 2.0);
        Junction b = junction_after_edge(a_pos, gamma_dir, gamma, turn);
        Junction c = junction_after_edge(b.pos, b.next, zeta, turn);
        Vec3 d_pos = geodesic_point(c.pos, c.next, eps);
        Vec3 d_expect = mirror_y(c.pos);
        if (norm(d_pos - d_expect) > 1e-7)
            throw std::domain_error("pentagon_family: pentagon does not close for these parameters");

        if (b.pos.z <= 1e-9 || c.pos.z <= 1e-9)
            throw std::domain_error("pentagon_family: a pentagon vertex is not above the equator");

        double rad_b = arc_to_equator(b.pos, b.radial);
        double rad_c = arc_to_equator(c.pos, c.radial);
        Vec3 foot_b = geodesic_point(b.pos, b.radial, rad_b);
        Vec3 foot_c = geodesic_point(c.pos, c.radial, rad_c);
        double ang_b = std::asin(std::clamp(std::abs(geodesic_tangent(b.pos, b.radial, rad_b).z), 0.0, 1.0));
        double ang_c = std::asin(std::clamp(std::abs(geodesic_tangent(c.pos, c.radial, rad_c).z), 0.0, 1.0));

        // recompute the junction angles from vertex positions: at A between
        // the radial arc and the two edges, at D (the mirror of C, reached
        // through the closure) between both edges and the mirrored radial
        auto toward = [](const Vec3& p, const Vec3& q) { return normalized(q - p * dot(p, q)); };
        residual = std::max(residual, junction_residual(t_beta, toward(a_pos, b.pos)));
        residual = std::max(residual, junction_residual(t_beta, toward(a_pos, mirror_y(b.pos))));
        residual = std::max(residual, junction_residual(toward(a_pos, b.pos), toward(a_pos, mirror_y(b.pos))));
        residual = std::max(residual, junction_residual(b.back, b.next));
        residual = std::max(residual, junction_residual(b.back, b.radial));
        Vec3 d_rad = mirror_y(c.radial);
        residual = std::max(residual, junction_residual(toward(d_expect, c.pos), toward(d_expect, mirror_y(b.pos))));
        residual = std::max(residual, junction_residual(toward(d_expect, c.pos), d_rad));
        residual = std::max(residual, norm(d_pos - d_expect));

        auto add_node = [&](const Vec3& p, bool eq, double cang, const std::string& name) {
            ContactKind kind = std::abs(cang - kPi / 2.0) <= 1e-9 ? ContactKind::Orthogonal
                                                                  : ContactKind::Tilted;
            net.nodes.push_back({static_cast<int>(net.nodes.size()), p, eq, kind, cang, name});
            return net.nodes.back().id;
        };
        int A = add_node(a_pos, false, 0.0, "A");
        int B = add_node(b.pos, false, 0.0, "B");
        int C = add_node(c.pos, false, 0.0, "C");
        int D = add_node(d_expect, false, 0.0, "D");
        int E = add_node(mirror_y(b.pos), false, 0.0, "E");
        int FA = add_node({1.0, 0.0, 0.0}, true, kPi / 2.0, "foot_A");
        int FB = add_node(foot_b, true, ang_b, "foot_B");
        int FC = add_node(foot_c, true, ang_c, "foot_C");
        int FD = add_node(mirror_y(foot_c), true, ang_c, "foot_D");
        int FE = add_node(mirror_y(foot_b), true, ang_b, "foot_E");

        net.arcs = {{A, B, gamma, "gamma"},   {B, C, zeta, "zeta"}, {C, D, eps, "eps"},
                    {D, E, zeta, "zeta_p"},   {E, A, gamma, "gamma_p"},
                    {A, FA, beta, "beta"},    {B, FB, rad_b, "delta"},
                    {C, FC, rad_c, "rho"},    {D, FD, rad_c, "rho_p"},
                    {E, FE, rad_b, "delta_p"}};
        net.junction_residual = residual;
    }
    return net;
}

} // namespace slidingcones
