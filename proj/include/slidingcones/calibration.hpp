#pragma once

#include "slidingcones/cones.hpp"
#include "slidingcones/geom.hpp"

#include <optional>
#include <string>
#include <vector>

// Paired-calibration certificates: the constant vector per complementary
// region, the window faces, the fold normals the differences must attain,
// and the boundary coefficient along the sliding plane.

namespace slidingcones {

struct FoldInterface {
    int region_a = 0, region_b = 0;
    VecN normal; // unit, oriented from region_a toward region_b
};

struct BoundaryPair {
    int region_hi = 0;  // region whose footprint pays the boundary weight
    int region_lo = 0;  // reference region with a free footprint
    bool realized = false; // the cone itself rests on the boundary here
};

struct CalibrationFamily {
    std::string name;
    int dim = 3;
    std::vector<VecN> vectors;                 // w_i, 1-based region ids
    VecN vertical;                             // inward unit normal of the half-space
    std::vector<std::pair<int, VecN>> region_faces; // region -> window face normal
    std::vector<FoldInterface> interfaces;
    std::vector<BoundaryPair> boundary_pairs;
    double alpha_required = 0.0;

    const VecN& w(int region) const { return vectors[static_cast<std::size_t>(region - 1)]; }
};

struct ConditionReport {
    bool pass = true;
    double worst_slack = 0.0; // positive means violated by that much
    std::string detail;
};

struct CertificateReport {
    ConditionReport face_orthogonality;  // C1
    ConditionReport pairwise_slack;      // C2
    ConditionReport fold_attainment;     // C3
    ConditionReport boundary_coefficient;// C4
    double alpha = 0.0;
    double alpha_required = 0.0;
    bool pass = false;

    std::string to_json() const;
};

// The printed vector family with adjacency for T_plus, Y_beta, Ybar_beta,
// W_beta and Delta_plus(n); other families have no certificate.
CalibrationFamily calibration_for(const ConeSpec& spec);

CertificateReport verify_certificate(const CalibrationFamily& family, double alpha);

// alpha_n = sqrt((n+1) / (2n)) for n >= 3.
double alpha_threshold(int n);

} // namespace slidingcones
