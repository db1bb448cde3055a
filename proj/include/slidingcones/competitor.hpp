#pragma once

#include "slidingcones/energy.hpp"

#include <optional>

// The analytic competitor family for the half-T cone: logarithmic profile,
// parameter relations, energies and the closed-form energy gap.

namespace slidingcones {

// z(x) = x / sqrt(2) + c log(3 x / sqrt(2)); z(sqrt(2)/3) = 1/3 for every c.
double profile_z(double x, double c);
double profile_z_prime(double x, double c);

// c with profile_z(x0, c) = 0, for x0 in (0, sqrt(2)/3).
double c_from_x0(double x0);

// Upper end of the profile interval, sqrt(2)/3.
double profile_x_max();

struct CompetitorEnergy {
    EnergyReport report;      // quadrature energies of the competitor
    double j_upper_bound = 0; // the closed-form bound on j_alpha
    double c = 0;
};

// off_gamma by adaptive quadrature of the bent and vertical fold integrals,
// on_gamma = 3 sqrt(3) x0^2 (the equilateral triangle of apothem x0).
CompetitorEnergy competitor_energy(double x0, double alpha);

// Energy of the cone itself in the matching window, 4 sqrt(2) / 3.
double t_plus_cone_energy();

// Closed-form upper bound for J(M_c) - J(T_plus):
// 3 x0^2 [ -sqrt(2) - sqrt(2)/log(3 x0/sqrt(2)) + alpha sqrt(3) ].
double energy_gap(double x0, double alpha);

// Alpha at which the closed-form gap vanishes for this x0. Values outside
// [0, 1] mean the gap keeps one sign over the admissible weights.
double gap_threshold_alpha(double x0);

// Limit of the gap bracket as x0 -> 0+: alpha sqrt(3) - sqrt(2), negative
// exactly below the minimality threshold sqrt(2/3).
double gap_small_triangle_limit(double alpha);

// Gap-minimizing x0 with a negative closed-form gap, if one exists. Within
// about 1e-3 of the threshold the witnessing x0 underflows doubles and the
// search reports none; gap_small_triangle_limit carries the exact sign.
std::optional<double> find_beating_competitor(double alpha);

} // namespace slidingcones
