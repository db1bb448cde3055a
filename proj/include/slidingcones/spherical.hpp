#pragma once

#include "slidingcones/geom.hpp"

#include <string>
#include <vector>

// Spherical-network side-length formulas for 120-degree nets and the
// symmetric one-pentagon family on the upper hemisphere.

namespace slidingcones {

enum class ContactKind { Orthogonal, Tilted };

struct ArcNode {
    int id = 0;
    Vec3 position;
    bool on_equator = false;
    ContactKind contact = ContactKind::Orthogonal; // meaningful for equator nodes
    double contact_angle = 0.0;                    // radians with the equator
    std::string name;
};

struct Arc {
    int from = 0, to = 0;
    double length = 0.0; // radians
    std::string name;
};

struct ArcNet {
    std::vector<ArcNode> nodes;
    std::vector<Arc> arcs;
    double junction_residual = 0.0; // worst deviation from 120 degrees, radians
};

// Side of the spherical equiangular triangle, arccos(-1/3).
double triangle_side();

// Adjacent-side relation of the 120-degree spherical rectangle,
// cos(b) = (3 - 5 cos a) / (5 - 3 cos a).
double rect_side(double a);

// Half-angle form of the same relation, cos(b/2) = 2 sin(a/2) / sqrt(1 + 3 sin^2(a/2)).
double rect_side_half_angle(double a);

// Side adjacent to neither of two adjacent pentagon sides a and b:
// 2 cos(c) = 1/3 + cos a + cos b + cos a cos b - sin a sin b.
double pentagon_side(double a, double b);

// Symmetric single-pentagon network: orthogonal radial arc beta under vertex
// A, pentagon sides (gamma, zeta, eps, zeta, gamma) with zeta and eps derived
// from gamma, remaining radial arcs dropped to the equator.
ArcNet pentagon_family(double beta, double gamma);

// zeta solving the symmetric side relation zeta' = zeta for the given gamma.
double pentagon_zeta(double gamma);

} // namespace slidingcones
