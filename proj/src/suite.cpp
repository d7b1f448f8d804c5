#include "kdvd/suite.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "kdvd/airy.hpp"
#include "kdvd/estimates.hpp"
#include "kdvd/extremizer.hpp"
#include "kdvd/propagator.hpp"

namespace kdvd {

namespace {

GridSpec sweep_grid(const RunConfig& config, const FamilyMember& member, double t) {
    if (config.grid_L && config.grid_N) return GridSpec(*config.grid_L, *config.grid_N);
    return propagation_grid(member.bandwidth, t);
}

GridFunction sample_member(const FamilyMember& member, const GridSpec& spec) {
    return GridFunction::sample(spec, member.f);
}

void tag(EstimateReport& r, const FamilyMember& member) { r.metadata["input"] = member.name; }

} // namespace

void RunConfig::validate() const {
    for (double t : t_values)
        if (!(t > 0.0)) throw parameter_error("RunConfig: t_values must all be > 0");
    if (t_values.empty()) throw parameter_error("RunConfig: t_values empty");
    if (grid_L.has_value() != grid_N.has_value())
        throw parameter_error("RunConfig: grid overrides need both L and N");
    if (grid_L) GridSpec(*grid_L, *grid_N); // validates
    for (std::size_t i = 1; i < sharpness_n.size(); ++i)
        if (sharpness_n[i] <= sharpness_n[i - 1])
            throw parameter_error("RunConfig: sharpness_n must be increasing");
}

std::vector<EstimateReport> sweep_estimate(const std::string& which, const RunConfig& config) {
    config.validate();
    std::vector<FamilyMember> family = standard_family(config.family, config.seed);
    std::vector<EstimateReport> out;

    if (which == "landau") {
        for (const FamilyMember& m : family) {
            GridSpec spec = sweep_grid(config, m, 0.0);
            EstimateReport r = check_landau_inequality(sample_member(m, spec));
            tag(r, m);
            out.push_back(std::move(r));
        }
        return out;
    }

    for (double t : config.t_values) {
        for (const FamilyMember& m : family) {
            GridSpec spec = sweep_grid(config, m, t);
            GridFunction f = sample_member(m, spec);
            if (which == "linfty") {
                EstimateReport r = check_linfty_estimate(f, t);
                tag(r, m);
                out.push_back(std::move(r));
            } else if (which == "jform") {
                auto [r3, r4] = check_j_form_estimates(f, f, t);
                tag(r3, m);
                tag(r4, m);
                out.push_back(std::move(r3));
                out.push_back(std::move(r4));
            } else if (which == "bilinear") {
                for (BilinearVariant v : {BilinearVariant::statement, BilinearVariant::proof}) {
                    EstimateReport r = check_bilinear_estimate(f, f, t, v);
                    tag(r, m);
                    out.push_back(std::move(r));
                }
            } else if (which == "schrodinger") {
                EstimateReport r = check_schrodinger_estimate(f, t);
                tag(r, m);
                out.push_back(std::move(r));
            } else if (which == "besov") {
                GridFunction phi = kdv_group(f, {t, PropagatorMethod::spectral});
                EstimateReport r = check_besov_decay(phi, t, -40, 12);
                tag(r, m);
                out.push_back(std::move(r));
            } else {
                throw parameter_error("sweep_estimate: unknown check '" + which + "'");
            }
        }
    }
    return out;
}

SweepResult run_suite(const RunConfig& config) {
    config.validate();
    SweepResult result;
    result.config = config;

    {
        AiryExtremum ext = find_airy_max();
        EstimateReport r;
        r.name = "airy_extremum";
        r.lhs = ext.sharp_constant;
        r.rhs_without_constant = 1.0;
        r.ratio = ext.sharp_constant;
        r.t = 0.0;
        r.passes = true;
        r.metadata["x0"] = format_double(ext.x0);
        r.metadata["ai_max"] = format_double(ext.ai_max);
        r.metadata["group_sharp_constant"] = format_double(linfty_sharp_constant());
        result.reports.push_back(std::move(r));
    }

    for (const char* which : {"linfty", "jform", "bilinear", "besov", "schrodinger", "landau"}) {
        std::vector<EstimateReport> rs = sweep_estimate(which, config);
        result.reports.insert(result.reports.end(), rs.begin(), rs.end());
    }

    for (double lambda : {1.0, 3.0})
        result.reports.push_back(verify_minimizer_identity(lambda, minimizer_grid(lambda)));

    std::vector<EstimateReport> sharp = sharpness_experiment(config.sharpness_n);
    result.reports.insert(result.reports.end(), sharp.begin(), sharp.end());

    bool first = true;
    for (const EstimateReport& r : result.reports) {
        if (first) {
            result.summary.max_ratio = result.summary.min_ratio = r.ratio;
            first = false;
        }
        result.summary.max_ratio = std::max(result.summary.max_ratio, r.ratio);
        result.summary.min_ratio = std::min(result.summary.min_ratio, r.ratio);
        (r.passes ? result.summary.pass_count : result.summary.fail_count)++;
    }

    emit_report(result, config.format);
    return result;
}

bool all_passed(const SweepResult& result) {
    for (const EstimateReport& r : result.reports)
        if (!r.passes) return false;
    return true;
}

std::vector<std::string> emit_report(const SweepResult& result, OutputFormat format) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(result.config.output_dir, ec);
    if (ec) throw io_error("cannot create output dir: " + result.config.output_dir);
    std::vector<std::string> paths;

    if (format == OutputFormat::csv) {
        std::string path = result.config.output_dir + "/reports.csv";
        std::ofstream os(path);
        if (!os) throw io_error("cannot write " + path);
        os << csv_header() << "\n";
        for (const EstimateReport& r : result.reports) os << to_csv_row(r) << "\n";
        paths.push_back(path);
    } else {
        std::string path = result.config.output_dir + "/reports.json";
        std::ofstream os(path);
        if (!os) throw io_error("cannot write " + path);
        os << "[";
        for (std::size_t i = 0; i < result.reports.size(); ++i)
            os << (i ? "," : "") << "\n  " << to_json(result.reports[i]);
        os << "\n]\n";
        paths.push_back(path);
    }

    // sharpness table: n, ratio, bound, gap
    std::string spath = result.config.output_dir + "/sharpness.csv";
    std::ofstream ss(spath);
    if (!ss) throw io_error("cannot write " + spath);
    ss << "n,ratio,bound,gap\n";
    for (const EstimateReport& r : result.reports) {
        if (r.name != "sharpness") continue;
        double bound = r.claimed_constant.value_or(0.0);
        ss << r.metadata.at("n") << "," << format_double(r.ratio) << "," << format_double(bound)
           << "," << format_double(bound - r.ratio) << "\n";
    }
    paths.push_back(spath);
    return paths;
}

} // namespace kdvd
