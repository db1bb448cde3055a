#pragma once

#include <string>
#include <vector>

// One-dimensional sliding cones in the half-plane: the five optimal
// profiles, the contact-point minimization and the branch-count
// classification.

namespace slidingcones {

enum class ProfileKind {
    Gamma,                  // the boundary line itself
    Vertical,               // vertical half-line
    GammaPlusVertical,      // boundary line plus vertical half-line
    TiltedPlusHorizontal,   // P_theta plus a horizontal arm on the far side
    VCone                   // P_theta and its mirror image
};

struct Profile1D {
    ProfileKind kind = ProfileKind::Vertical;
    double theta = 0.0; // radians, used by TiltedPlusHorizontal and VCone
};

struct Branch1D {
    double angle = 0.0; // radians from the positive boundary direction, in [0, pi]
    bool in_gamma = false;
};

struct Verdict1D {
    bool minimal = false;
    std::string reason;
};

// theta_alpha with alpha = cos(theta_alpha), alpha in [0, 1].
double theta_alpha(double alpha);

// Energy of the two-segment join A=(-1,0) -- C=(x,0) -- B=(cos t, sin t):
// alpha(1+x) + sqrt((x - cos t)^2 + sin^2 t), for x in (-1, cos t].
double join_energy(double x, double theta, double alpha);
double join_energy_dx(double x, double theta, double alpha);

// Minimizer of join_energy over the admissible interval. Interior critical
// point cos t - x = alpha sin t / sqrt(1 - alpha^2), clamped to [-1, cos t];
// x = 0 exactly when cos t = alpha.
double optimal_contact(double theta, double alpha);

// Decision rules of the branch-count classification.
Verdict1D is_minimal_1d(const std::vector<Branch1D>& branches, double alpha);

// Branch set realizing a profile (V-cone/tilted profiles take their theta).
std::vector<Branch1D> profile_branches(const Profile1D& profile);

// J_alpha of the profile clipped to the unit ball (arm lengths 1).
double profile_energy_1d(const Profile1D& profile, double alpha);

// Threshold alpha = cos(pi/6) above which the minimality of the cone
// Gamma + vertical rests on the sliding condition (the pinched-Y branches
// would meet the boundary at 30 degrees).
double alpha_iii_sliding_threshold();

} // namespace slidingcones
