#pragma once

#include "slidingcones/energy.hpp"
#include "slidingcones/mesh.hpp"

#include <string>
#include <vector>

// Constrained surface evolver: projected gradient descent on the weighted
// area of a tagged mesh, plus the pinch surgeries that seed the non-minimal
// cone experiments.

namespace slidingcones {

struct EvolveConfig {
    double alpha = 0.5;
    double step_size = 0.05;
    int max_steps = 500;
    double grad_tol = 1e-8;
    int averaging_every = 25; // 0 disables tangential averaging
};

struct TraceRow {
    int step = 0;
    EnergyReport energy;
    double step_size = 0.0;
};

struct EvolveResult {
    TaggedMesh mesh;
    std::vector<TraceRow> trace;
    int steps = 0;
};

// Exact gradient of the discrete weighted area with respect to vertex
// positions; Pinned rows are zeroed, OnGamma rows projected into {z = 0}.
std::vector<Vec3> energy_gradient(const TaggedMesh& mesh, double alpha);

EvolveResult evolve(const TaggedMesh& mesh, const EvolveConfig& config);

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& trace);

enum class PinchPreset {
    Identity,
    TPlusFat,      // open the apex of T_plus into a boundary triangle
    TPlusY,        // same surgery on the T+Y cone
    YPlusY,        // contract the shared wedge, insert the missing interface
    YPlus2YLow,
    YPlus2YHigh,   // pinch adjacent sloping folds, vertical sheet on the bisector
    YPlus3YLow,
    YPlus3YHigh,
    CPlus,         // open the apex into a vertical half-square
    Rectangle,     // open the apex into a boundary rectangle
    PentagonPrism  // vertical half-square against a prism face
};

PinchPreset pinch_preset_from_name(const std::string& name);
std::string pinch_preset_name(PinchPreset preset);

struct PinchRecipe {
    PinchPreset preset = PinchPreset::Identity;
    double phi = 0.0;   // tilt of the sloping Y cones, where the family has one
    double rho = 0.35;  // range along the identified fold curves
    double eps = 0.04;  // initial extent of the inserted sheet
    double alpha = 0.5; // used to size the boundary polygon for apex splits
};

// Deterministic topology surgery on a mesh built from the named family.
TaggedMesh pinch(const TaggedMesh& mesh, const PinchRecipe& recipe);

struct PresetFamily {
    std::string name;
    TaggedMesh cone_mesh;
    double matched_alpha = 0.5;  // optimal-profile alpha of the family tilt
    double cone_energy_exact = 0.0;
    PinchRecipe recipe;
};

// Cone mesh, matched alpha and default recipe for a non-minimal family in
// the unit-ball window. phi is the tilt parameter where the family has one
// (ignored otherwise); alpha only affects families minimal at every alpha.
PresetFamily preset_family(PinchPreset preset, double phi, int resolution, double alpha);

} // namespace slidingcones
