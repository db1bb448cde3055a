#include "slidingcones/calibration.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace slidingcones {

namespace {

constexpr double kTol = 1e-12;

VecN to_vecn(const Vec3& v) { return {v.x, v.y, v.z}; }

VecN rot_vec(double beta, const Vec3& v) {
    Vec3 r = rotation_beta(beta).apply(v);
    return {r.x, r.y, r.z};
}

void copy_fold_interfaces(CalibrationFamily& f, const ConeSpec& spec) {
    FoldSet fs = folds(spec);
    for (const auto& fold : fs.folds) {
        if (fold.on_gamma) continue;
        FoldInterface iface;
        iface.region_a = fold.region_a;
        iface.region_b = fold.region_b;
        iface.normal = fold.normal;
        f.interfaces.push_back(iface);
    }
}

CalibrationFamily family_t_plus() {
    CalibrationFamily f;
    f.name = "t-plus";
    f.dim = 3;
    auto v = t_plus_vertices();
    double s = std::sqrt(3.0 / 8.0);
    for (const auto& vi : v) f.vectors.push_back(to_vecn(vi * -s));
    f.vertical = {0.0, 0.0, 1.0};
    for (int i = 1; i <= 4; ++i) f.region_faces.emplace_back(i, to_vecn(v[static_cast<std::size_t>(i - 1)]));
    copy_fold_interfaces(f, ConeSpec::t_plus());
    for (int i = 1; i <= 3; ++i) f.boundary_pairs.push_back({4, i, false});
    f.alpha_required = std::sqrt(2.0 / 3.0);
    return f;
}

CalibrationFamily family_delta_plus(int n) {
    CalibrationFamily f;
    f.name = "delta-plus-" + std::to_string(n);
    f.dim = n;
    auto p = simplex_vertices(n);
    double ell = edge_length(n);
    for (const auto& pi : p) f.vectors.push_back(scale(pi, -1.0 / ell));
    f.vertical = VecN(static_cast<std::size_t>(n), 0.0);
    f.vertical[0] = 1.0;
    for (int i = 1; i <= n + 1; ++i) f.region_faces.emplace_back(i, p[static_cast<std::size_t>(i - 1)]);
    copy_fold_interfaces(f, ConeSpec::delta_plus(n));
    for (int j = 2; j <= n + 1; ++j) f.boundary_pairs.push_back({1, j, false});
    f.alpha_required = alpha_threshold(n);
    return f;
}

CalibrationFamily family_y_beta(double beta, bool bar) {
    CalibrationFamily f;
    f.name = bar ? "ybar-beta" : "y-beta";
    f.dim = 3;
    double r3 = std::sqrt(3.0);
    std::vector<Vec3> base;
    if (!bar)
        base = {{-1.0 / r3, 0.0, 0.0}, {1.0 / (2.0 * r3), -0.5, 0.0}, {1.0 / (2.0 * r3), 0.5, 0.0}};
    else
        base = {{1.0 / r3, 0.0, 0.0}, {-1.0 / (2.0 * r3), 0.5, 0.0}, {-1.0 / (2.0 * r3), -0.5, 0.0}};
    for (const auto& b : base) f.vectors.push_back(rot_vec(beta, b));
    f.vertical = {0.0, 0.0, 1.0};
    for (int i = 1; i <= 3; ++i)
        f.region_faces.emplace_back(i, rot_vec(beta, normalized(base[static_cast<std::size_t>(i - 1)])));
    copy_fold_interfaces(f, bar ? ConeSpec::ybar_beta(beta) : ConeSpec::y_beta(beta));
    if (!bar) {
        f.boundary_pairs.push_back({1, 2, true});
        f.boundary_pairs.push_back({1, 3, true});
        f.boundary_pairs.push_back({2, 3, false});
    } else {
        f.boundary_pairs.push_back({2, 1, true});
        f.boundary_pairs.push_back({3, 1, true});
        f.boundary_pairs.push_back({2, 3, false});
    }
    f.alpha_required = std::sqrt(3.0) / 2.0 * std::cos(beta);
    return f;
}

CalibrationFamily family_w_beta(double beta) {
    CalibrationFamily f;
    f.name = "w-beta";
    f.dim = 3;
    double sb = std::sin(beta), cb = std::cos(beta), rs = std::sqrt(3.0) / 2.0;
    f.vectors = {{rs * sb, 0.0, -rs * cb},
                 {-rs * sb, 0.0, -rs * cb},
                 {0.0, 0.5, 0.0},
                 {0.0, -0.5, 0.0}};
    f.vertical = {0.0, 0.0, 1.0};
    // ball window: no planar faces to be orthogonal to
    copy_fold_interfaces(f, ConeSpec::w_beta(beta));
    f.boundary_pairs = {{3, 1, true}, {3, 2, true}, {4, 1, true}, {4, 2, true},
                        {1, 2, false}, {3, 4, false}};
    f.alpha_required = rs * cb;
    return f;
}

} // namespace

CalibrationFamily calibration_for(const ConeSpec& spec) {
    switch (spec.family) {
        case ConeFamily::TPlus: return family_t_plus();
        case ConeFamily::DeltaPlus: return family_delta_plus(spec.n);
        case ConeFamily::YBeta: return family_y_beta(spec.beta, false);
        case ConeFamily::YBarBeta: return family_y_beta(spec.beta, true);
        case ConeFamily::WBeta: return family_w_beta(spec.beta);
        default:
            throw std::invalid_argument(
                "calibration_for: no paired calibration for family " + spec.family_name());
    }
}

double alpha_threshold(int n) {
    if (n < 3) throw std::domain_error("alpha_threshold: n must be >= 3");
    return std::sqrt((n + 1) / (2.0 * n));
}

namespace {

void worse(ConditionReport& r, double violation, const std::string& detail) {
    if (violation > r.worst_slack) {
        r.worst_slack = violation;
        r.detail = detail;
    }
    if (violation > 0.0) r.pass = false;
}

} // namespace

CertificateReport verify_certificate(const CalibrationFamily& family, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
    for (const auto& w : family.vectors)
        if (static_cast<int>(w.size()) != family.dim)
            throw std::invalid_argument("verify_certificate: vector dimension mismatch");
    if (static_cast<int>(family.vertical.size()) != family.dim)
        throw std::invalid_argument("verify_certificate: vertical axis dimension mismatch");

    CertificateReport rep;
    rep.alpha = alpha;
    rep.alpha_required = family.alpha_required;
    rep.face_orthogonality.worst_slack = -1.0;
    rep.pairwise_slack.worst_slack = -1.0;
    rep.fold_attainment.worst_slack = -1.0;
    rep.boundary_coefficient.worst_slack = -1.0;

    // C1: w_i parallel to its window face normal
    for (const auto& [region, face] : family.region_faces) {
        const VecN& w = family.w(region);
        double proj = dot(w, face) / dot(face, face);
        VecN residual = sub(w, scale(face, proj));
        worse(rep.face_orthogonality, norm(residual) - kTol,
              "w_" + std::to_string(region) + " not orthogonal to its face");
    }

    // C2: |w_i - w_j| <= 1 over every pair of regions
    int m = static_cast<int>(family.vectors.size());
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            worse(rep.pairwise_slack, norm(sub(family.w(i), family.w(j))) - 1.0 - kTol,
                  "|w_" + std::to_string(i) + " - w_" + std::to_string(j) + "| exceeds 1");

    // C3: w_j - w_i attains the fold normal
    for (const auto& iface : family.interfaces)
        worse(rep.fold_attainment,
              norm(sub(sub(family.w(iface.region_b), family.w(iface.region_a)), iface.normal)) - kTol,
              "fold (" + std::to_string(iface.region_a) + "," + std::to_string(iface.region_b) +
                  ") normal not attained");

    // C4: boundary coefficient at most alpha, equal on realized pairs
    for (const auto& bp : family.boundary_pairs) {
        double coeff = dot(sub(family.w(bp.region_hi), family.w(bp.region_lo)), family.vertical);
        std::string label = "pair (" + std::to_string(bp.region_hi) + "," +
                            std::to_string(bp.region_lo) + ")";
        if (bp.realized)
            worse(rep.boundary_coefficient, std::abs(coeff - alpha) - kTol,
                  label + " realized on the boundary but coefficient differs from alpha");
        else
            worse(rep.boundary_coefficient, coeff - alpha - kTol, label + " coefficient exceeds alpha");
    }

    rep.pass = rep.face_orthogonality.pass && rep.pairwise_slack.pass &&
               rep.fold_attainment.pass && rep.boundary_coefficient.pass;
    return rep;
}

std::string CertificateReport::to_json() const {
    auto cond = [](const ConditionReport& c) {
        nlohmann::json j{{"pass", c.pass}, {"worst_slack", c.worst_slack}};
        if (!c.pass) j["detail"] = c.detail;
        return j;
    };
    nlohmann::json j{{"alpha", alpha},
                     {"alpha_required", alpha_required},
                     {"face_orthogonality", cond(face_orthogonality)},
                     {"pairwise_slack", cond(pairwise_slack)},
                     {"fold_attainment", cond(fold_attainment)},
                     {"boundary_coefficient", cond(boundary_coefficient)},
                     {"pass", pass}};
    return j.dump();
}

} // namespace slidingcones
