#ifndef KDVD_SUITE_HPP
#define KDVD_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdvd/family.hpp"
#include "kdvd/report.hpp"

namespace kdvd {

enum class OutputFormat { csv, json };

struct RunConfig {
    std::optional<double> grid_L;  // overrides for the default sweep grids
    std::optional<int> grid_N;
    std::vector<double> t_values = {0.5, 1.0, 2.0, 4.0};
    TestFamilyKind family = TestFamilyKind::all;
    std::uint64_t seed = 20240501;
    std::string output_dir = ".";
    OutputFormat format = OutputFormat::csv;
    std::vector<int> sharpness_n = {8, 16, 32, 64, 128};

    void validate() const; // t_values > 0, grid overrides sane
};

struct SweepSummary {
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    int pass_count = 0;
    int fail_count = 0;
};

struct SweepResult {
    RunConfig config;
    std::vector<EstimateReport> reports; // sorted by (t, family index)
    SweepSummary summary;
};

/// Run every check: airy max, estimates (1)-(4), Besov decay, Schrodinger,
/// Landau, the minimizer identity and the sharpness sweep. Writes artifacts
/// to config.output_dir; deterministic for a fixed config (incl. seed).
SweepResult run_suite(const RunConfig& config);

/// true iff every constant-bearing report passes (the process exit contract).
bool all_passed(const SweepResult& result);

/// Write reports to <output_dir>/reports.csv or reports.json; returns paths.
std::vector<std::string> emit_report(const SweepResult& result, OutputFormat format);

/// Individual sweeps (also used by the CLI `check` subcommand).
std::vector<EstimateReport> sweep_estimate(const std::string& which, const RunConfig& config);

} // namespace kdvd

#endif
