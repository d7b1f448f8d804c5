// Command-line front end: evaluate Ai, apply the propagators and Hilbert
// transforms to CSV-serialized grid functions, run individual estimate
// checks, the sharpness sweep, and the full suite.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kdvd/airy.hpp"
#include "kdvd/estimates.hpp"
#include "kdvd/extremizer.hpp"
#include "kdvd/hilbert.hpp"
#include "kdvd/propagator.hpp"
#include "kdvd/suite.hpp"

namespace {

std::string default_out_dir() {
    const char* env = std::getenv("KDVD_OUT_DIR");
    return env ? env : ".";
}

void emit_warnings(const std::vector<kdvd::Warning>& warnings) {
    for (const kdvd::Warning& w : warnings) {
        nlohmann::json j{{"warning", w.code}, {"message", w.message}};
        std::cerr << j.dump() << "\n";
    }
}

kdvd::TestFamilyKind parse_family(const std::string& s) {
    if (s == "gaussians") return kdvd::TestFamilyKind::gaussians;
    if (s == "bumps") return kdvd::TestFamilyKind::bumps;
    if (s == "random_bandlimited") return kdvd::TestFamilyKind::random_bandlimited;
    if (s == "modulated") return kdvd::TestFamilyKind::modulated;
    if (s == "all") return kdvd::TestFamilyKind::all;
    throw CLI::ValidationError("family", "unknown family: " + s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical checks for sharp weighted dispersive estimates of the Airy/KdV group"};
    app.require_subcommand(1);

    // --- airy ---
    auto* airy = app.add_subcommand("airy", "evaluate Ai / locate its maximum");
    airy->require_subcommand(1);
    auto* airy_eval = airy->add_subcommand("eval", "print Ai(z), Ai'(z) as JSON");
    double z = 0.0;
    airy_eval->add_option("--z", z, "argument")->required();
    airy_eval->callback([&] {
        kdvd::AiryEvaluation e = kdvd::airy_ai(z);
        nlohmann::json j{{"z", e.argument},
                         {"value", e.value},
                         {"derivative", e.derivative},
                         {"abs_error_estimate", e.abs_error_estimate}};
        std::cout << j.dump() << "\n";
    });
    auto* airy_max = airy->add_subcommand("max", "print the extremum of |Ai|");
    airy_max->callback([&] {
        kdvd::AiryExtremum ext = kdvd::find_airy_max();
        nlohmann::json j{{"x0", ext.x0},
                         {"ai_max", ext.ai_max},
                         {"sharp_constant", ext.sharp_constant},
                         {"group_sharp_constant", kdvd::linfty_sharp_constant()}};
        std::cout << j.dump() << "\n";
    });

    // --- propagate ---
    auto* prop = app.add_subcommand("propagate", "apply U(t) to a grid function");
    double pt = 1.0;
    std::string method = "spectral", group = "kdv", in_path, out_path;
    prop->add_option("--t", pt, "time")->required();
    prop->add_option("--method", method, "spectral | airy_convolution");
    prop->add_option("--group", group, "kdv | schrodinger");
    prop->add_option("--in", in_path, "input CSV")->required();
    prop->add_option("--out", out_path, "output CSV")->required();
    prop->callback([&] {
        kdvd::GridFunction f = kdvd::load_csv(in_path);
        kdvd::GridFunction g;
        if (group == "schrodinger") {
            g = kdvd::schrodinger_group(f, pt);
        } else {
            kdvd::PropagatorMethod m = method == "airy_convolution"
                                           ? kdvd::PropagatorMethod::airy_convolution
                                           : kdvd::PropagatorMethod::spectral;
            g = kdvd::kdv_group(f, {pt, m});
        }
        kdvd::BoundaryMassReport bm = kdvd::boundary_mass(g);
        if (bm.tail_fraction > 1e-6)
            emit_warnings({{"truncation",
                            "output boundary mass tail_fraction = " + std::to_string(bm.tail_fraction)}});
        kdvd::save_csv(g, out_path);
    });

    // --- hilbert ---
    auto* hil = app.add_subcommand("hilbert", "apply the Hilbert transform");
    std::string hmethod = "multiplier";
    hil->add_option("--method", hmethod, "multiplier | principal_value");
    hil->add_option("--in", in_path, "input CSV")->required();
    hil->add_option("--out", out_path, "output CSV")->required();
    hil->callback([&] {
        kdvd::GridFunction f = kdvd::load_csv(in_path);
        kdvd::HilbertMethod m = hmethod == "principal_value" ? kdvd::HilbertMethod::principal_value
                                                             : kdvd::HilbertMethod::multiplier;
        kdvd::save_csv(kdvd::hilbert_transform(f, m), out_path);
    });

    // --- check ---
    auto* check = app.add_subcommand("check", "run one estimate check over the test family");
    std::string which = "linfty", family = "all", format = "csv", out_dir = default_out_dir();
    std::vector<double> ts;
    std::uint64_t seed = 20240501;
    double gL = 0.0;
    int gN = 0;
    check->add_option("--name", which, "linfty | jform | bilinear | besov | schrodinger | landau")
        ->required();
    check->add_option("--t", ts, "time values (> 0)");
    check->add_option("--family", family, "gaussians | bumps | random_bandlimited | modulated | all");
    check->add_option("--seed", seed, "random family seed");
    check->add_option("--grid-L", gL, "grid half-width override");
    check->add_option("--grid-N", gN, "grid size override (power of two)");
    check->add_option("--out", out_dir, "output directory");
    check->add_option("--format", format, "csv | json");
    check->callback([&] {
        kdvd::RunConfig config;
        if (!ts.empty()) config.t_values = ts;
        config.family = parse_family(family);
        config.seed = seed;
        config.output_dir = out_dir;
        config.format = format == "json" ? kdvd::OutputFormat::json : kdvd::OutputFormat::csv;
        if (gL > 0.0) config.grid_L = gL;
        if (gN > 0) config.grid_N = gN;
        kdvd::SweepResult result;
        result.config = config;
        result.reports = kdvd::sweep_estimate(which, config);
        for (const kdvd::EstimateReport& r : result.reports)
            (r.passes ? result.summary.pass_count : result.summary.fail_count)++;
        kdvd::emit_report(result, config.format);
        if (!kdvd::all_passed(result)) std::exit(1);
    });

    // --- sharpness ---
    auto* sharp = app.add_subcommand("sharpness", "extremizer-sequence sweep");
    std::vector<int> ns = {8, 16, 32, 64, 128};
    sharp->add_option("--n", ns, "concentration parameters (increasing)")->delimiter(',');
    sharp->add_option("--out", out_dir, "output directory");
    sharp->callback([&] {
        std::vector<kdvd::EstimateReport> rs = kdvd::sharpness_experiment(ns);
        std::cout << "n,ratio,bound,gap\n";
        for (const kdvd::EstimateReport& r : rs) {
            double bound = r.claimed_constant.value_or(0.0);
            std::cout << r.metadata.at("n") << "," << kdvd::format_double(r.ratio) << ","
                      << kdvd::format_double(bound) << "," << kdvd::format_double(bound - r.ratio)
                      << "\n";
        }
    });

    // --- suite ---
    auto* suite = app.add_subcommand("suite", "run every check and write reports");
    suite->add_option("--t", ts, "time values (> 0)");
    suite->add_option("--family", family, "family selector");
    suite->add_option("--seed", seed, "random family seed");
    suite->add_option("--grid-L", gL, "grid half-width override");
    suite->add_option("--grid-N", gN, "grid size override");
    suite->add_option("--out", out_dir, "output directory");
    suite->add_option("--format", format, "csv | json");
    suite->callback([&] {
        kdvd::RunConfig config;
        if (!ts.empty()) config.t_values = ts;
        config.family = parse_family(family);
        config.seed = seed;
        config.output_dir = out_dir;
        config.format = format == "json" ? kdvd::OutputFormat::json : kdvd::OutputFormat::csv;
        if (gL > 0.0) config.grid_L = gL;
        if (gN > 0) config.grid_N = gN;
        kdvd::SweepResult result = kdvd::run_suite(config);
        std::cout << "reports: " << result.reports.size() << "  pass: " << result.summary.pass_count
                  << "  fail: " << result.summary.fail_count << "\n";
        if (!kdvd::all_passed(result)) std::exit(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
