#ifndef KDVD_ERRORS_HPP
#define KDVD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kdvd {

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct range_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-fatal diagnostic attached to an operation result.
struct Warning {
    std::string code;
    std::string message;
};

} // namespace kdvd

#endif
