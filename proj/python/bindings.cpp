#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slidingcones/calibration.hpp"
#include "slidingcones/competitor.hpp"
#include "slidingcones/cones.hpp"
#include "slidingcones/energy.hpp"
#include "slidingcones/evolve.hpp"
#include "slidingcones/geom.hpp"
#include "slidingcones/onedim.hpp"
#include "slidingcones/spherical.hpp"
#include "slidingcones/version.hpp"

namespace py = pybind11;
using namespace slidingcones;

namespace {

ConeSpec spec_from(const std::string& family, double beta, int n) {
    if (family == "t-plus") return ConeSpec::t_plus();
    if (family == "y-beta") return ConeSpec::y_beta(beta);
    if (family == "ybar-beta") return ConeSpec::ybar_beta(beta);
    if (family == "w-beta") return ConeSpec::w_beta(beta);
    if (family == "delta-plus") return ConeSpec::delta_plus(n);
    if (family == "c-plus") return ConeSpec::c_plus();
    throw std::domain_error("unknown family: " + family);
}

Window window_from(const std::string& name, double radius) {
    if (name == "ball") return Window::ball(radius);
    if (name == "simplex") return Window::simplex();
    if (name == "prism") return Window::prism();
    throw std::domain_error("unknown window: " + name);
}

Profile1D profile_from(const std::string& kind, double theta) {
    if (kind == "gamma") return {ProfileKind::Gamma, 0.0};
    if (kind == "vertical") return {ProfileKind::Vertical, 0.0};
    if (kind == "gamma-vertical") return {ProfileKind::GammaPlusVertical, 0.0};
    if (kind == "tilted") return {ProfileKind::TiltedPlusHorizontal, theta};
    if (kind == "v-cone") return {ProfileKind::VCone, theta};
    throw std::domain_error("unknown profile: " + kind);
}

py::dict report_dict(const EnergyReport& r) {
    py::dict d;
    d["off_gamma"] = r.off_gamma;
    d["on_gamma"] = r.on_gamma;
    d["alpha"] = r.alpha;
    d["j_alpha"] = r.j_alpha;
    return d;
}

} // namespace

PYBIND11_MODULE(_slidingcones, m) {
    m.doc() = "sliding minimal cone toolkit";
    m.attr("__version__") = kVersion;

    py::class_<TaggedMesh>(m, "TaggedMesh")
        .def(py::init<>())
        .def_property_readonly("vertex_count", &TaggedMesh::vertex_count)
        .def_property_readonly("triangle_count", &TaggedMesh::triangle_count)
        .def("validate", [](const TaggedMesh& mesh) { mesh.validate(); })
        .def("vertex",
             [](const TaggedMesh& mesh, int i) {
                 const Vec3& v = mesh.vertices.at(static_cast<std::size_t>(i));
                 return py::make_tuple(v.x, v.y, v.z);
             })
        .def("tag", [](const TaggedMesh& mesh, int i) {
            return std::string(1, static_cast<char>(mesh.tags.at(static_cast<std::size_t>(i))));
        });

    m.def("simplex_vertices", &simplex_vertices, py::arg("n"));
    m.def("edge_length", &edge_length, py::arg("n"));
    m.def("edge_orthogonality_defect",
          py::overload_cast<int, int, int>(&edge_orthogonality_defect), py::arg("n"),
          py::arg("i"), py::arg("j"));
    m.def("gamma_from_beta", &gamma_from_beta, py::arg("beta"));
    m.def("alpha_threshold", &alpha_threshold, py::arg("n"));

    m.def("theta_alpha", &theta_alpha, py::arg("alpha"));
    m.def("join_energy", &join_energy, py::arg("x"), py::arg("theta"), py::arg("alpha"));
    m.def("optimal_contact", &optimal_contact, py::arg("theta"), py::arg("alpha"));
    m.def(
        "is_minimal_1d",
        [](const std::vector<std::pair<double, bool>>& branches, double alpha) {
            std::vector<Branch1D> bs;
            for (const auto& [angle, in_gamma] : branches) bs.push_back({angle, in_gamma});
            auto v = is_minimal_1d(bs, alpha);
            return py::make_tuple(v.minimal, v.reason);
        },
        py::arg("branches"), py::arg("alpha"));

    m.def("triangle_side", &triangle_side);
    m.def("rect_side", &rect_side, py::arg("a"));
    m.def("pentagon_side", &pentagon_side, py::arg("a"), py::arg("b"));
    m.def(
        "pentagon_family",
        [](double beta, double gamma) {
            auto net = pentagon_family(beta, gamma);
            py::list arcs;
            for (const auto& a : net.arcs) {
                py::dict d;
                d["name"] = a.name;
                d["length"] = a.length;
                d["from"] = a.from;
                d["to"] = a.to;
                arcs.append(d);
            }
            py::dict out;
            out["arcs"] = arcs;
            out["junction_residual"] = net.junction_residual;
            return out;
        },
        py::arg("beta"), py::arg("gamma"));

    m.def(
        "calibration_report",
        [](const std::string& family, double alpha, double beta, int n) {
            auto fam = calibration_for(spec_from(family, beta, n));
            auto rep = verify_certificate(fam, alpha >= 0.0 ? alpha : fam.alpha_required);
            py::dict d;
            d["pass"] = rep.pass;
            d["alpha"] = rep.alpha;
            d["alpha_required"] = rep.alpha_required;
            d["face_orthogonality"] = rep.face_orthogonality.pass;
            d["pairwise_slack"] = rep.pairwise_slack.pass;
            d["fold_attainment"] = rep.fold_attainment.pass;
            d["boundary_coefficient"] = rep.boundary_coefficient.pass;
            return d;
        },
        py::arg("family"), py::arg("alpha") = -1.0, py::arg("beta") = 0.0, py::arg("n") = 3);

    m.def(
        "build_mesh",
        [](const std::string& family, const std::string& window, int resolution, double beta,
           int n, const std::string& profile, double theta) {
            ConeSpec spec = family == "product" ? ConeSpec::product(profile_from(profile, theta))
                                                : spec_from(family, beta, n);
            return build_mesh(spec, window_from(window, 1.0), resolution);
        },
        py::arg("family"), py::arg("window"), py::arg("resolution"), py::arg("beta") = 0.0,
        py::arg("n") = 3, py::arg("profile") = "vertical", py::arg("theta") = 0.0);

    m.def(
        "j_alpha_mesh",
        [](const TaggedMesh& mesh, double alpha) { return report_dict(j_alpha_mesh(mesh, alpha)); },
        py::arg("mesh"), py::arg("alpha"));

    m.def(
        "j_alpha_exact",
        [](const std::string& family, const std::string& window, double alpha, double beta, int n) {
            return report_dict(j_alpha_exact(spec_from(family, beta, n), window_from(window, 1.0), alpha));
        },
        py::arg("family"), py::arg("window"), py::arg("alpha"), py::arg("beta") = 0.0,
        py::arg("n") = 3);

    m.def("profile_z", &profile_z, py::arg("x"), py::arg("c"));
    m.def("c_from_x0", &c_from_x0, py::arg("x0"));
    m.def("energy_gap", &energy_gap, py::arg("x0"), py::arg("alpha"));
    m.def("t_plus_cone_energy", &t_plus_cone_energy);
    m.def(
        "find_beating_competitor",
        [](double alpha) -> py::object {
            auto x0 = find_beating_competitor(alpha);
            if (!x0) return py::none();
            return py::float_(*x0);
        },
        py::arg("alpha"));

    m.def(
        "evolve_preset",
        [](const std::string& preset, double phi, double alpha, int resolution, int steps) {
            auto fam = preset_family(pinch_preset_from_name(preset), phi, resolution, alpha);
            double a = fam.matched_alpha;
            double cone = j_alpha_mesh(fam.cone_mesh, a).j_alpha;
            auto pinched = pinch(fam.cone_mesh, fam.recipe);
            EvolveConfig config;
            config.alpha = a;
            config.max_steps = steps;
            config.averaging_every = 10;
            auto result = evolve(pinched, config);
            py::dict d;
            d["name"] = fam.name;
            d["alpha"] = a;
            d["cone_energy_mesh"] = cone;
            d["cone_energy_exact"] = fam.cone_energy_exact;
            d["evolved_energy"] = result.trace.back().energy.j_alpha;
            d["steps"] = result.steps;
            return d;
        },
        py::arg("preset"), py::arg("phi"), py::arg("alpha") = 0.7, py::arg("resolution") = 12,
        py::arg("steps") = 400);
}
