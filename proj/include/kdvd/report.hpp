#ifndef KDVD_REPORT_HPP
#define KDVD_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kdvd {

/// One inequality check: left side, right side without its constant, their
/// ratio, the claimed constant (absent = empirical, no numeric claim), and
/// the pass verdict ratio <= constant*(1+tolerance).
struct EstimateReport {
    std::string name;
    double lhs = 0.0;
    double rhs_without_constant = 0.0;
    double ratio = 0.0;
    std::optional<double> claimed_constant; // nullopt = "empirical"
    double t = 0.0;
    bool passes = true;
    std::map<std::string, std::string> metadata;

    static constexpr double kTolerance = 1e-3;

    static EstimateReport make(std::string name, double lhs, double rhs,
                               std::optional<double> constant, double t);
};

std::string to_json(const EstimateReport& r);

/// CSV columns: name,t,lhs,rhs,ratio,constant,passes (17 significant digits,
/// constant printed as "empirical" when absent).
std::string csv_header();
std::string to_csv_row(const EstimateReport& r);

std::string format_double(double v); // %.17g

} // namespace kdvd

#endif
