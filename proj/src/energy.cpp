#include "slidingcones/energy.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace slidingcones {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("alpha must lie in [0, 1]");
}

// Neumaier compensated accumulation keeps the reduction deterministic and
// insensitive to triangle count.
struct Accumulator {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace

std::string EnergyReport::to_json() const {
    nlohmann::json j{{"off_gamma", off_gamma},
                     {"on_gamma", on_gamma},
                     {"alpha", alpha},
                     {"j_alpha", j_alpha}};
    return j.dump();
}

EnergyReport make_energy_report(double off_gamma, double on_gamma, double alpha) {
    check_alpha(alpha);
    if (off_gamma < 0.0 || on_gamma < 0.0) throw std::domain_error("areas must be nonnegative");
    return {off_gamma, on_gamma, alpha, off_gamma + alpha * on_gamma};
}

EnergyReport j_alpha_mesh(const TaggedMesh& mesh, double alpha) {
    check_alpha(alpha);
    Accumulator off, on;
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        double a = mesh.triangle_area(t);
        if (!(a > 1e-14))
            throw std::invalid_argument("j_alpha_mesh: degenerate triangle " + std::to_string(t));
        (mesh.triangle_on_gamma(t) ? on : off).add(a);
    }
    return make_energy_report(off.value(), on.value(), alpha);
}

EnergyReport j_alpha_exact(const ConeSpec& spec, const Window& window, double alpha) {
    check_alpha(alpha);
    if (spec.family == ConeFamily::Custom)
        throw std::invalid_argument("j_alpha_exact: unsupported for custom meshes");
    auto patches = fold_patches(spec);
    auto geometry = window_geometry(spec, window);
    Accumulator off, on;
    for (const auto& p : patches) (p.on_gamma ? on : off).add(patch_window_area(p, geometry));
    return make_energy_report(off.value(), on.value(), alpha);
}

SlicingCheck slicing_check(const Profile1D& profile, double alpha, int resolution) {
    check_alpha(alpha);
    auto spec = ConeSpec::product(profile);
    TaggedMesh mesh = build_mesh(spec, Window::prism(), resolution);
    SlicingCheck out;
    out.lhs = j_alpha_mesh(mesh, alpha).j_alpha;
    out.rhs = profile_energy_1d(profile, alpha) * 1.0;
    return out;
}

} // namespace slidingcones
