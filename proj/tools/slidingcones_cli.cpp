#include "slidingcones/calibration.hpp"
#include "slidingcones/competitor.hpp"
#include "slidingcones/cones.hpp"
#include "slidingcones/energy.hpp"
#include "slidingcones/evolve.hpp"
#include "slidingcones/geom.hpp"
#include "slidingcones/onedim.hpp"
#include "slidingcones/spherical.hpp"
#include "slidingcones/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sc = slidingcones;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
double deg2rad(double d) { return d * kPi / 180.0; }

struct Output {
    std::string out_path;
    std::string manifest_path;
    std::string command;
    json params;
    std::vector<std::string> inputs, outputs;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit(const std::string& text) {
        if (out_path.empty()) {
            std::cout << text << '\n';
        } else {
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("cannot open for writing: " + out_path);
            os << text << '\n';
            outputs.push_back(out_path);
        }
        if (!manifest_path.empty()) {
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            json m{{"command", command},       {"parameters", params},
                   {"toolkit_version", sc::kVersion}, {"inputs", inputs},
                   {"outputs", outputs},       {"wall_seconds", secs}};
            std::ofstream os(manifest_path);
            if (!os) throw std::runtime_error("cannot open for writing: " + manifest_path);
            os << m.dump(2) << '\n';
        }
    }
};

sc::ConeSpec spec_from_name(const std::string& family, double beta_rad, int n) {
    if (family == "t-plus") return sc::ConeSpec::t_plus();
    if (family == "y-beta") return sc::ConeSpec::y_beta(beta_rad);
    if (family == "ybar-beta") return sc::ConeSpec::ybar_beta(beta_rad);
    if (family == "w-beta") return sc::ConeSpec::w_beta(beta_rad);
    if (family == "delta-plus") return sc::ConeSpec::delta_plus(n);
    if (family == "c-plus") return sc::ConeSpec::c_plus();
    throw std::domain_error("unknown family: " + family);
}

sc::Profile1D profile_from_name(const std::string& name, double theta_rad) {
    if (name == "gamma") return {sc::ProfileKind::Gamma, 0.0};
    if (name == "vertical") return {sc::ProfileKind::Vertical, 0.0};
    if (name == "gamma-vertical") return {sc::ProfileKind::GammaPlusVertical, 0.0};
    if (name == "tilted") return {sc::ProfileKind::TiltedPlusHorizontal, theta_rad};
    if (name == "v-cone") return {sc::ProfileKind::VCone, theta_rad};
    throw std::domain_error("unknown profile: " + name);
}

json vec_json(const sc::VecN& v) { return json(v); }

int cmd_simplex(Output& out, int n) {
    auto vertices = sc::simplex_vertices(n);
    double worst = 0.0;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
            worst = std::max(worst, sc::edge_orthogonality_defect(vertices, i, j));
    json j{{"n", n}, {"edge_length", sc::edge_length(n)}, {"max_orthogonality_defect", worst}};
    for (const auto& v : vertices) j["vertices"].push_back(vec_json(v));
    out.emit(j.dump(2));
    return 0;
}

int cmd_calibrate(Output& out, const std::string& family, double alpha, bool alpha_set,
                  double beta_rad, int n) {
    auto spec = spec_from_name(family, beta_rad, n);
    auto fam = sc::calibration_for(spec);
    double a = alpha_set ? alpha : fam.alpha_required;
    auto rep = sc::verify_certificate(fam, a);
    json j = json::parse(rep.to_json());
    j["family"] = fam.name;
    json ws;
    for (const auto& w : fam.vectors) ws.push_back(vec_json(w));
    j["vectors"] = ws;
    out.emit(j.dump(2));
    return rep.pass ? 0 : 0;
}

int cmd_energy(Output& out, const std::string& family, double alpha, const std::string& window,
               int res, double beta_rad, int n, const std::string& profile, double theta_rad) {
    sc::ConeSpec spec = family == "product" ? sc::ConeSpec::product(profile_from_name(profile, theta_rad))
                                            : spec_from_name(family, beta_rad, n);
    sc::Window win = window == "ball" ? sc::Window::ball(1.0)
                     : window == "simplex" ? sc::Window::simplex()
                     : window == "prism" ? sc::Window::prism()
                                         : throw std::domain_error("unknown window: " + window);
    auto exact = sc::j_alpha_exact(spec, win, alpha);
    auto mesh = sc::build_mesh(spec, win, res);
    auto quad = sc::j_alpha_mesh(mesh, alpha);
    json j{{"family", spec.family_name()},
           {"window", window},
           {"resolution", res},
           {"exact", json::parse(exact.to_json())},
           {"mesh", json::parse(quad.to_json())},
           {"mesh_vertices", mesh.vertex_count()},
           {"mesh_triangles", mesh.triangle_count()}};
    out.emit(j.dump(2));
    return 0;
}

int cmd_compete(Output& out, double alpha, bool sweep, double x0_arg, bool x0_set) {
    if (sweep) {
        std::ostringstream os;
        os << "x0,c,alpha,gap_closed_form,j_quadrature\n";
        char buf[200];
        for (int i = 1; i <= 40; ++i) {
            double x0 = sc::profile_x_max() * i / 42.0;
            auto e = sc::competitor_energy(x0, alpha);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", x0, e.c, alpha,
                          sc::energy_gap(x0, alpha), e.report.j_alpha);
            os << buf;
        }
        std::string s = os.str();
        s.pop_back();
        out.emit(s);
        return 0;
    }
    json j{{"alpha", alpha}, {"cone_energy", sc::t_plus_cone_energy()}};
    if (x0_set) {
        auto e = sc::competitor_energy(x0_arg, alpha);
        j["x0"] = x0_arg;
        j["c"] = e.c;
        j["gap_closed_form"] = sc::energy_gap(x0_arg, alpha);
        j["j_quadrature"] = e.report.j_alpha;
        j["j_upper_bound"] = e.j_upper_bound;
    } else {
        auto best = sc::find_beating_competitor(alpha);
        j["beating_competitor_exists"] = best.has_value();
        if (best) {
            auto e = sc::competitor_energy(*best, alpha);
            j["x0"] = *best;
            j["c"] = e.c;
            j["gap_closed_form"] = sc::energy_gap(*best, alpha);
            j["j_quadrature"] = e.report.j_alpha;
        }
    }
    out.emit(j.dump(2));
    return 0;
}

int cmd_classify(Output& out, const std::vector<std::string>& branches, double alpha) {
    std::vector<sc::Branch1D> bs;
    for (auto token : branches) {
        bool in_gamma = false;
        if (!token.empty() && (token.back() == 'g' || token.back() == 'G')) {
            in_gamma = true;
            token.pop_back();
        }
        bs.push_back({deg2rad(std::stod(token)), in_gamma});
    }
    auto v = sc::is_minimal_1d(bs, alpha);
    json j{{"alpha", alpha}, {"minimal", v.minimal}, {"reason", v.reason}};
    out.emit(j.dump(2));
    return 0;
}

int cmd_taylor(Output& out, const std::string& formula, double a_rad, double b_rad) {
    json j{{"formula", formula}};
    if (formula == "triangle") {
        j["side"] = sc::triangle_side();
    } else if (formula == "rect") {
        j["a"] = a_rad;
        j["b"] = sc::rect_side(a_rad);
        j["b_half_angle_form"] = sc::rect_side_half_angle(a_rad);
    } else if (formula == "pentagon") {
        j["a"] = a_rad;
        j["b"] = b_rad;
        j["c"] = sc::pentagon_side(a_rad, b_rad);
    } else {
        throw std::domain_error("unknown formula: " + formula);
    }
    out.emit(j.dump(2));
    return 0;
}

int cmd_pentagon(Output& out, double beta_rad, double gamma_rad) {
    auto net = sc::pentagon_family(beta_rad, gamma_rad);
    json j{{"beta", beta_rad}, {"gamma", gamma_rad}, {"junction_residual", net.junction_residual}};
    for (const auto& n : net.nodes)
        j["nodes"].push_back(json{{"id", n.id},
                                  {"name", n.name},
                                  {"position", {n.position.x, n.position.y, n.position.z}},
                                  {"on_equator", n.on_equator},
                                  {"contact", n.on_equator ? (n.contact == sc::ContactKind::Orthogonal
                                                                  ? "orthogonal"
                                                                  : "tilted")
                                                           : "junction"},
                                  {"contact_angle", n.contact_angle}});
    for (const auto& a : net.arcs)
        j["arcs"].push_back(json{{"from", a.from}, {"to", a.to}, {"length", a.length}, {"name", a.name}});
    out.emit(j.dump(2));
    return 0;
}

int cmd_evolve(Output& out, const std::string& mesh_path, const std::string& preset_name,
               double alpha, double phi_rad, int steps, int res, double step_size,
               const std::string& trace_path, const std::string& mesh_out) {
    sc::TaggedMesh mesh;
    json j;
    sc::PinchRecipe recipe;
    bool have_preset = !preset_name.empty() && preset_name != "identity";
    if (have_preset) {
        auto preset = sc::pinch_preset_from_name(preset_name);
        auto fam = sc::preset_family(preset, phi_rad, res, alpha);
        recipe = fam.recipe;
        if (alpha != fam.matched_alpha) {
            // honor the family-matched value unless the caller overrode alpha
            j["matched_alpha"] = fam.matched_alpha;
        }
        mesh = fam.cone_mesh;
        j["cone_energy_exact"] = fam.cone_energy_exact;
        j["cone_energy_mesh"] = sc::j_alpha_mesh(mesh, alpha).j_alpha;
        mesh = sc::pinch(mesh, recipe);
    } else if (!mesh_path.empty()) {
        mesh = sc::read_tmesh_file(mesh_path);
        out.inputs.push_back(mesh_path);
    } else {
        throw std::domain_error("evolve needs --mesh or --preset");
    }
    sc::EvolveConfig config;
    config.alpha = alpha;
    config.max_steps = steps;
    config.step_size = step_size;
    auto result = sc::evolve(mesh, config);
    j["preset"] = have_preset ? preset_name : "none";
    j["alpha"] = alpha;
    j["steps"] = result.steps;
    j["initial"] = json::parse(result.trace.front().energy.to_json());
    j["final"] = json::parse(result.trace.back().energy.to_json());
    if (!trace_path.empty()) {
        std::ofstream os(trace_path);
        if (!os) throw std::runtime_error("cannot open for writing: " + trace_path);
        sc::write_trace_csv(os, result.trace);
        out.outputs.push_back(trace_path);
    }
    if (!mesh_out.empty()) {
        sc::write_tmesh_file(mesh_out, result.mesh);
        out.outputs.push_back(mesh_out);
    }
    out.emit(j.dump(2));
    return 0;
}

} // namespace

namespace slidingcones {

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"sliding minimal cone toolkit"};
    app.require_subcommand(1);
    Output out;

    std::string family = "t-plus", window = "simplex", profile = "vertical";
    std::string formula = "triangle", mesh_path, preset_name, trace_path, mesh_out;
    std::vector<std::string> branch_tokens;
    double alpha = 0.5, beta_deg = 0.0, gamma_deg = 60.0, theta_deg = 60.0;
    double a_deg = 100.0, b_deg = 100.0, phi_deg = 20.0, x0 = 0.05, step_size = 0.05;
    int n = 3, res = 16, steps = 400;

    app.add_option("--out", out.out_path, "write the primary output to this file");
    app.add_option("--manifest", out.manifest_path, "write a run manifest to this file");

    auto* simplex = app.add_subcommand("simplex", "canonical regular simplex");
    simplex->add_option("n", n, "dimension")->required();

    auto* calibrate = app.add_subcommand("calibrate", "verify a paired-calibration certificate");
    calibrate->add_option("family", family, "t-plus | y-beta | ybar-beta | w-beta | delta-plus")
        ->required();
    auto* cal_alpha = calibrate->add_option("--alpha", alpha, "boundary weight");
    calibrate->add_option("--beta", beta_deg, "tilt in degrees");
    calibrate->add_option("--n", n, "dimension for delta-plus");

    auto* energy = app.add_subcommand("energy", "exact and mesh energies of a cone family");
    energy->add_option("family", family, "family name or 'product'")->required();
    energy->add_option("--alpha", alpha)->required();
    energy->add_option("--window", window, "ball | simplex | prism");
    energy->add_option("--res", res, "mesh resolution");
    energy->add_option("--beta", beta_deg, "tilt in degrees");
    energy->add_option("--n", n);
    energy->add_option("--profile", profile, "gamma | vertical | gamma-vertical | tilted | v-cone");
    energy->add_option("--theta", theta_deg, "profile angle in degrees");

    auto* compete = app.add_subcommand("compete", "competitor family for the half-T cone");
    compete->add_option("--alpha", alpha)->required();
    auto* sweep_flag = compete->add_flag("--sweep", "emit a CSV sweep over x0");
    auto* x0_opt = compete->add_option("--x0", x0, "evaluate a single competitor");

    auto* classify = app.add_subcommand("classify1d", "classify a one-dimensional cone");
    classify->add_option("branches", branch_tokens,
                         "branch angles in degrees, suffix 'g' for boundary branches")
        ->required();
    classify->add_option("--alpha", alpha)->required();

    auto* taylor = app.add_subcommand("taylor", "spherical network side-length formulas");
    taylor->add_option("formula", formula, "triangle | rect | pentagon")->required();
    taylor->add_option("--a", a_deg, "side a in degrees");
    taylor->add_option("--b", b_deg, "side b in degrees");

    auto* pentagon = app.add_subcommand("pentagon", "symmetric one-pentagon network");
    pentagon->add_option("--beta", beta_deg)->required();
    pentagon->add_option("--gamma", gamma_deg)->required();

    auto* evolve_cmd = app.add_subcommand("evolve", "projected gradient descent on a tagged mesh");
    evolve_cmd->add_option("--mesh", mesh_path, "input mesh in TMESH format");
    evolve_cmd->add_option("--preset", preset_name, "non-minimal family preset");
    evolve_cmd->add_option("--alpha", alpha)->required();
    evolve_cmd->add_option("--phi", phi_deg, "family tilt in degrees");
    evolve_cmd->add_option("--steps", steps);
    evolve_cmd->add_option("--res", res);
    evolve_cmd->add_option("--step-size", step_size);
    evolve_cmd->add_option("--trace", trace_path, "energy trace CSV");
    evolve_cmd->add_option("--mesh-out", mesh_out, "write the evolved mesh");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 64;
    }

    try {
        out.command = app.get_subcommands().front()->get_name();
        out.params = json{{"alpha", alpha}};
        if (simplex->parsed()) return cmd_simplex(out, n);
        if (calibrate->parsed())
            return cmd_calibrate(out, family, alpha, cal_alpha->count() > 0, deg2rad(beta_deg), n);
        if (energy->parsed())
            return cmd_energy(out, family, alpha, window, res, deg2rad(beta_deg), n, profile,
                              deg2rad(theta_deg));
        if (compete->parsed())
            return cmd_compete(out, alpha, sweep_flag->count() > 0, x0, x0_opt->count() > 0);
        if (classify->parsed()) return cmd_classify(out, branch_tokens, alpha);
        if (taylor->parsed()) return cmd_taylor(out, formula, deg2rad(a_deg), deg2rad(b_deg));
        if (pentagon->parsed()) return cmd_pentagon(out, deg2rad(beta_deg), deg2rad(gamma_deg));
        if (evolve_cmd->parsed())
            return cmd_evolve(out, mesh_path, preset_name, alpha, deg2rad(phi_deg), steps, res,
                              step_size, trace_path, mesh_out);
        std::cerr << "no subcommand\n";
        return 64;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace slidingcones

#ifndef SLIDINGCONES_CLI_NO_MAIN
int main(int argc, char** argv) { return slidingcones::cli_dispatch(argc, argv); }
#endif
