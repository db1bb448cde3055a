#include <doctest.h>

#include "slidingcones/version.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Captured {
    int exit_code = 0;
    std::string out;
};

// run the dispatcher in-process with stdout redirected to a temp file
Captured run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "slidingcones");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());

    std::fflush(stdout);
    int saved = dup(fileno(stdout));
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/slidingcones_cli_test.out";
    FILE* f = std::freopen(path.c_str(), "w", stdout);
    REQUIRE(f != nullptr);
    Captured cap;
    cap.exit_code = slidingcones::cli_dispatch(static_cast<int>(argv.size()), argv.data());
    std::fflush(stdout);
    dup2(saved, fileno(stdout));
    close(saved);
    std::FILE* in = std::fopen(path.c_str(), "r");
    REQUIRE(in != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), in)) > 0) cap.out.append(buf, n);
    std::fclose(in);
    return cap;
}

} // namespace

TEST_CASE("simplex subcommand prints the edge length") {
    auto cap = run_cli({"simplex", "4"});
    CHECK(cap.exit_code == 0);
    auto j = nlohmann::json::parse(cap.out);
    CHECK(j["edge_length"].get<double>() == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    CHECK(j["vertices"].size() == 5);
}

TEST_CASE("calibrate subcommand verifies the half-T certificate") {
    auto pass = run_cli({"calibrate", "t-plus", "--alpha", "0.8165"});
    CHECK(pass.exit_code == 0);
    auto j = nlohmann::json::parse(pass.out);
    CHECK(j["pass"].get<bool>());
    auto fail = run_cli({"calibrate", "t-plus", "--alpha", "0.5"});
    auto jf = nlohmann::json::parse(fail.out);
    CHECK_FALSE(jf["pass"].get<bool>());
}

TEST_CASE("compete subcommand reports a beating competitor below the threshold") {
    auto cap = run_cli({"compete", "--alpha", "0.5"});
    CHECK(cap.exit_code == 0);
    auto j = nlohmann::json::parse(cap.out);
    CHECK(j["beating_competitor_exists"].get<bool>());
    CHECK(j["gap_closed_form"].get<double>() < 0.0);
    CHECK(j["x0"].get<double>() < 0.0358);

    auto none = nlohmann::json::parse(run_cli({"compete", "--alpha", "0.9"}).out);
    CHECK_FALSE(none["beating_competitor_exists"].get<bool>());
}

TEST_CASE("compete sweep emits the csv columns") {
    auto cap = run_cli({"compete", "--alpha", "0.4", "--sweep"});
    CHECK(cap.exit_code == 0);
    CHECK(cap.out.rfind("x0,c,alpha,gap_closed_form,j_quadrature\n", 0) == 0);
}

TEST_CASE("classify1d parses boundary suffixes and degrees") {
    auto j = nlohmann::json::parse(run_cli({"classify1d", "0g", "180g", "90", "--alpha", "0.6"}).out);
    CHECK(j["minimal"].get<bool>());
    auto j2 = nlohmann::json::parse(run_cli({"classify1d", "40", "140", "--alpha", "0.9"}).out);
    CHECK_FALSE(j2["minimal"].get<bool>());
    CHECK(j2["reason"].is_string());
}

TEST_CASE("taylor and pentagon subcommands") {
    auto t = nlohmann::json::parse(run_cli({"taylor", "triangle"}).out);
    CHECK(t["side"].get<double>() == doctest::Approx(std::acos(-1.0 / 3.0)));
    auto p = nlohmann::json::parse(run_cli({"pentagon", "--beta", "45", "--gamma", "43"}).out);
    CHECK(p["arcs"].size() == 10);
    CHECK(p["junction_residual"].get<double>() <= 1e-9);
}

TEST_CASE("energy subcommand reports exact and mesh values") {
    auto j = nlohmann::json::parse(
        run_cli({"energy", "t-plus", "--alpha", "0.5", "--window", "simplex", "--res", "6"}).out);
    double expect = 4.0 * std::sqrt(2.0) / 3.0;
    CHECK(j["exact"]["j_alpha"].get<double>() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(j["mesh"]["j_alpha"].get<double>() == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("domain errors exit with code 1, usage errors with 64") {
    auto bad_alpha = run_cli({"energy", "t-plus", "--alpha", "1.5", "--window", "simplex"});
    CHECK(bad_alpha.exit_code == 1);
    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.exit_code == 64);
    auto missing_mesh = run_cli({"evolve", "--mesh", "/nonexistent/mesh.tmesh", "--alpha", "0.5"});
    CHECK(missing_mesh.exit_code == 2);
}

TEST_CASE("identical inputs give byte-identical output") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"simplex", "7"},
             {"compete", "--alpha", "0.37", "--sweep"},
             {"calibrate", "w-beta", "--beta", "25"},
             {"pentagon", "--beta", "50", "--gamma", "44"}}) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}
