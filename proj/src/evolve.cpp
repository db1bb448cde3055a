#include "slidingcones/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace slidingcones {

std::vector<Vec3> energy_gradient(const TaggedMesh& mesh, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
    std::vector<Vec3> grad(mesh.vertices.size());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
        const Vec3& a = mesh.vertices[static_cast<std::size_t>(tri[0])];
        const Vec3& b = mesh.vertices[static_cast<std::size_t>(tri[1])];
        const Vec3& c = mesh.vertices[static_cast<std::size_t>(tri[2])];
        Vec3 n = cross(b - a, c - a);
        double nn = norm(n);
        if (nn <= 2e-14)
            throw std::invalid_argument("energy_gradient: degenerate triangle " + std::to_string(t));
        Vec3 unit = n / nn;
        double w = mesh.triangle_on_gamma(t) ? alpha : 1.0;
        // d(area)/d(vertex) = 0.5 * (opposite edge) x unit normal
        grad[static_cast<std::size_t>(tri[0])] += cross(b - c, unit) * (0.5 * w);
        grad[static_cast<std::size_t>(tri[1])] += cross(c - a, unit) * (0.5 * w);
        grad[static_cast<std::size_t>(tri[2])] += cross(a - b, unit) * (0.5 * w);
    }
    for (std::size_t i = 0; i < grad.size(); ++i) {
        switch (mesh.tags[i]) {
            case VertexTag::Pinned: grad[i] = {0.0, 0.0, 0.0}; break;
            case VertexTag::OnGamma: grad[i].z = 0.0; break;
            case VertexTag::Free: break;
        }
    }
    return grad;
}

namespace {

// Internal energy of the flow: plain weighted area sum. Triangles may pass
// through zero area during the descent; they carry no energy there and are
// compacted away at the end.
bool mesh_energy(const TaggedMesh& mesh, double alpha, EnergyReport& out) {
    double off = 0.0, on = 0.0;
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        double a = mesh.triangle_area(t);
        if (!std::isfinite(a)) return false;
        (mesh.triangle_on_gamma(t) ? on : off) += a;
    }
    out = {off, on, alpha, off + alpha * on};
    return true;
}

// Descent direction: the area gradient with near-degenerate triangles
// silenced (their normal direction is numerical noise and their energy
// contribution is below resolution).
std::vector<Vec3> descent_gradient(const TaggedMesh& mesh, double alpha) {
    std::vector<Vec3> grad(mesh.vertices.size());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
        const Vec3& a = mesh.vertices[static_cast<std::size_t>(tri[0])];
        const Vec3& b = mesh.vertices[static_cast<std::size_t>(tri[1])];
        const Vec3& c = mesh.vertices[static_cast<std::size_t>(tri[2])];
        Vec3 n = cross(b - a, c - a);
        double nn = norm(n);
        if (nn <= 2e-12) continue;
        Vec3 unit = n / nn;
        double w = mesh.triangle_on_gamma(t) ? alpha : 1.0;
        grad[static_cast<std::size_t>(tri[0])] += cross(b - c, unit) * (0.5 * w);
        grad[static_cast<std::size_t>(tri[1])] += cross(c - a, unit) * (0.5 * w);
        grad[static_cast<std::size_t>(tri[2])] += cross(a - b, unit) * (0.5 * w);
    }
    for (std::size_t i = 0; i < grad.size(); ++i) {
        switch (mesh.tags[i]) {
            case VertexTag::Pinned: grad[i] = {0.0, 0.0, 0.0}; break;
            case VertexTag::OnGamma: grad[i].z = 0.0; break;
            case VertexTag::Free: break;
        }
    }
    return grad;
}

void apply_step(TaggedMesh& mesh, const TaggedMesh& base, const std::vector<Vec3>& grad,
                double step) {
    for (std::size_t i = 0; i < base.vertices.size(); ++i) {
        if (base.tags[i] == VertexTag::Pinned) {
            mesh.vertices[i] = base.vertices[i];
            continue;
        }
        Vec3 v = base.vertices[i] - grad[i] * step;
        if (base.tags[i] == VertexTag::OnGamma)
            v.z = 0.0;
        else if (v.z < 0.0)
            v.z = 0.0;
        mesh.vertices[i] = v;
    }
}

double sup_norm(const std::vector<Vec3>& grad) {
    double m = 0.0;
    for (const auto& g : grad) m = std::max(m, norm(g));
    return m;
}

// Uniform-centroid smoothing restricted to the local tangent plane, skipped
// across creases and reverted wholesale if the energy went up.
void tangential_average(TaggedMesh& mesh, double alpha) {
    EnergyReport before;
    if (!mesh_energy(mesh, alpha, before)) return;
    std::vector<Vec3> normals(mesh.vertices.size());
    std::vector<double> weight(mesh.vertices.size(), 0.0);
    std::vector<bool> crease(mesh.vertices.size(), false);
    std::vector<Vec3> centroid(mesh.vertices.size());
    std::vector<int> degree(mesh.vertices.size(), 0);
    std::vector<Vec3> first_normal(mesh.vertices.size());

    for (int t = 0; t < mesh.triangle_count(); ++t) {
        double a = mesh.triangle_area(t);
        if (a <= 1e-12) continue;
        Vec3 n = mesh.triangle_normal(t);
        const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
        for (int k = 0; k < 3; ++k) {
            std::size_t v = static_cast<std::size_t>(tri[k]);
            if (weight[v] == 0.0)
                first_normal[v] = n;
            else if (std::abs(dot(first_normal[v], n)) < 0.9)
                crease[v] = true;
            normals[v] += n * a;
            weight[v] += a;
            for (int l = 0; l < 3; ++l) {
                if (l == k) continue;
                centroid[v] += mesh.vertices[static_cast<std::size_t>(tri[l])];
                ++degree[v];
            }
        }
    }
    TaggedMesh trial = mesh;
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
        if (mesh.tags[v] == VertexTag::Pinned || crease[v] || degree[v] == 0) continue;
        Vec3 target = centroid[v] / static_cast<double>(degree[v]);
        Vec3 delta = target - mesh.vertices[v];
        Vec3 n = normals[v];
        double nn = norm(n);
        if (nn < 1e-12) continue;
        n = n / nn;
        delta -= n * dot(delta, n);
        Vec3 moved = mesh.vertices[v] + delta * 0.5;
        if (mesh.tags[v] == VertexTag::OnGamma) moved.z = 0.0;
        if (moved.z < 0.0) moved.z = 0.0;
        trial.vertices[v] = moved;
    }
    EnergyReport after;
    if (mesh_energy(trial, alpha, after) && after.j_alpha <= before.j_alpha)
        mesh.vertices = std::move(trial.vertices);
}

} // namespace

EvolveResult evolve(const TaggedMesh& mesh, const EvolveConfig& config) {
    if (!(config.step_size > 0.0)) throw std::domain_error("evolve: step_size must be positive");
    if (!(config.alpha >= 0.0 && config.alpha <= 1.0))
        throw std::domain_error("evolve: alpha must lie in [0, 1]");
    mesh.validate();

    EvolveResult res;
    res.mesh = mesh;
    EnergyReport energy;
    if (!mesh_energy(res.mesh, config.alpha, energy))
        throw std::invalid_argument("evolve: degenerate input triangle");
    if (!std::isfinite(energy.j_alpha)) throw std::runtime_error("evolve: non-finite energy at step 0");
    double step = config.step_size;
    res.trace.push_back({0, energy, step});

    TaggedMesh trial = res.mesh;
    for (int it = 1; it <= config.max_steps; ++it) {
        auto grad = descent_gradient(res.mesh, config.alpha);
        if (sup_norm(grad) <= config.grad_tol) break;

        bool accepted = false;
        while (step >= 1e-14 * config.step_size) {
            apply_step(trial, res.mesh, grad, step);
            EnergyReport next;
            if (mesh_energy(trial, config.alpha, next)) {
                if (!std::isfinite(next.j_alpha))
                    throw std::runtime_error("evolve: non-finite energy at step " + std::to_string(it));
                if (next.j_alpha < energy.j_alpha) {
                    res.mesh.vertices = trial.vertices;
                    energy = next;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted) break;

        if (config.averaging_every > 0 && it % config.averaging_every == 0) {
            tangential_average(res.mesh, config.alpha);
            EnergyReport smoothed;
            if (mesh_energy(res.mesh, config.alpha, smoothed)) energy = smoothed;
        }
        res.trace.push_back({it, energy, step});
        res.steps = it;
        step = std::min(step * 1.5, config.step_size);
    }
    // triangles that the flow collapsed below resolution carry no energy;
    // drop them so the result satisfies the mesh invariants
    res.mesh = compacted(res.mesh, 1e-13);
    return res;
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& trace) {
    os << "step,off_gamma,on_gamma,j_alpha,step_size\n";
    char buf[160];
    for (const auto& row : trace) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", row.step,
                      row.energy.off_gamma, row.energy.on_gamma, row.energy.j_alpha,
                      row.step_size);
        os << buf;
    }
}

} // namespace slidingcones
