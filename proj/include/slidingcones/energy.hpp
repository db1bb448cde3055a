#pragma once

#include "slidingcones/cones.hpp"
#include "slidingcones/mesh.hpp"
#include "slidingcones/onedim.hpp"

#include <string>

// The weighted area functional: area off the boundary plane plus alpha times
// the area resting on it.

namespace slidingcones {

struct EnergyReport {
    double off_gamma = 0.0;
    double on_gamma = 0.0;
    double alpha = 0.0;
    double j_alpha = 0.0;

    std::string to_json() const;
};

EnergyReport make_energy_report(double off_gamma, double on_gamma, double alpha);

// Quadrature over the tagged mesh; a triangle is weighted by alpha exactly
// when it rests on the boundary plane per TaggedMesh::triangle_on_gamma.
EnergyReport j_alpha_mesh(const TaggedMesh& mesh, double alpha);

// Exact window-clipped energy of an analytic cone family.
EnergyReport j_alpha_exact(const ConeSpec& spec, const Window& window, double alpha);

struct SlicingCheck {
    double lhs = 0.0; // mesh energy of the product in the cylinder B x [0,1]
    double rhs = 0.0; // height times the 1-D profile energy
};

SlicingCheck slicing_check(const Profile1D& profile, double alpha, int resolution);

} // namespace slidingcones
