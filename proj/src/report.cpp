#include "kdvd/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace kdvd {

EstimateReport EstimateReport::make(std::string name, double lhs, double rhs,
                                    std::optional<double> constant, double t) {
    EstimateReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs_without_constant = rhs;
    r.ratio = (rhs > 0.0) ? lhs / rhs : 0.0;
    r.claimed_constant = constant;
    r.t = t;
    r.passes = !constant || r.ratio <= *constant * (1.0 + kTolerance);
    return r;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const EstimateReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs_without_constant"] = r.rhs_without_constant;
    j["ratio"] = r.ratio;
    if (r.claimed_constant)
        j["claimed_constant"] = *r.claimed_constant;
    else
        j["claimed_constant"] = "empirical";
    j["t"] = r.t;
    j["passes"] = r.passes;
    j["metadata"] = r.metadata;
    return j.dump();
}

std::string csv_header() { return "name,t,lhs,rhs,ratio,constant,passes"; }

std::string to_csv_row(const EstimateReport& r) {
    std::string c = r.claimed_constant ? format_double(*r.claimed_constant) : "empirical";
    return r.name + "," + format_double(r.t) + "," + format_double(r.lhs) + "," +
           format_double(r.rhs_without_constant) + "," + format_double(r.ratio) + "," + c + "," +
           (r.passes ? "true" : "false");
}

} // namespace kdvd
