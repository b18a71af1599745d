#ifndef BIONET_ERRORS_HPP_
#define BIONET_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace bionet {

// Exit-code mapping used by the CLI: UsageError -> 1, DataError -> 2,
// ConvergenceError -> 3.

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, std::vector<double> last, double residual)
        : std::runtime_error(msg), last_iterate(std::move(last)), residual(residual) {}
    std::vector<double> last_iterate;
    double residual;
};

}  // namespace bionet

#endif  // BIONET_ERRORS_HPP_
