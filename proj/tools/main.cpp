#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "esymm/errors.hpp"
#include "esymm/reports.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw esymm::ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int emit(const esymm::json& report, const std::string& output) {
    if (output == "text")
        std::cout << esymm::report_to_text(report);
    else
        std::cout << report.dump(2) << "\n";
    return esymm::report_passed(report) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify, and quantize extrinsic symplectic symmetric spaces"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::uint64_t seed = 0;
    std::string mode = "exact";
    std::string output = "json";
    app.add_option("--seed", seed, "seed for all randomized checks")->capture_default_str();
    app.add_option("--mode", mode, "scalar mode: exact or float (float only where permitted)")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    app.add_option("--output", output, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string lambda_path;
    auto* cmd_lambda = app.add_subcommand("check-lambda", "verify the defining conditions of a shape family");
    cmd_lambda->add_option("input", lambda_path, "shape family JSON file")->required();

    std::string surface_path;
    std::size_t verify_pairs = 50;
    auto* cmd_surface = app.add_subcommand("surface", "build a quadratic surface and verify its symmetries");
    cmd_surface->add_option("input", surface_path, "surface JSON file")->required();
    cmd_surface->add_option("--verify-symmetry", verify_pairs, "number of random point pairs")
        ->capture_default_str();

    std::string orbit_path;
    std::size_t orbit_samples = 10;
    auto* cmd_orbit = app.add_subcommand("orbit", "transvection orbits of a shape family");
    cmd_orbit->add_option("input", orbit_path, "family JSON file, optionally with a samples list")
        ->required();
    cmd_orbit->add_option("--samples", orbit_samples, "random samples when the file lists none")
        ->capture_default_str();

    std::size_t c2_n = 2, c2_count = 100;
    auto* cmd_c2 = app.add_subcommand("classify-codim2", "sample and classify codimension-2 solutions");
    cmd_c2->add_option("--n", c2_n, "half-dimension of the tangent block")->capture_default_str();
    cmd_c2->add_option("--count", c2_count, "number of sampled solutions")->capture_default_str();

    std::string star_path;
    bool on_sigma = false;
    std::vector<std::string> star_checks;
    auto* cmd_star = app.add_subcommand("star", "Moyal star products, ambient or induced on the surface");
    cmd_star->add_option("input", star_path, "JSON file with surface, f, g")->required();
    cmd_star->add_flag("--on-sigma", on_sigma, "compute the induced product in graph coordinates");
    cmd_star->add_option("--check", star_checks, "extra checks: assoc, derivation, invariance")
        ->check(CLI::IsMember({"assoc", "derivation", "invariance"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_lambda) return emit(esymm::run_check_lambda(read_file(lambda_path), seed), output);
        if (*cmd_surface)
            return emit(esymm::run_surface(read_file(surface_path), verify_pairs, seed), output);
        if (*cmd_orbit)
            return emit(esymm::run_orbit(read_file(orbit_path), orbit_samples, seed), output);
        if (*cmd_c2) return emit(esymm::run_classify_codim2(c2_n, c2_count, seed, mode), output);
        if (*cmd_star)
            return emit(esymm::run_star(read_file(star_path), on_sigma, star_checks, seed), output);
    } catch (const esymm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const esymm::json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
