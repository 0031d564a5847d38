#ifndef KINET_ERRORS_HPP
#define KINET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kinet {

/// Process exit codes used by the command line tool. Library errors carry
/// the code they map to so the tool can translate uniformly.
enum class ExitCode : int {
    ok = 0,
    failure = 1,
    config_error = 2,
    domain_error = 3,
    numerical_resolution = 4,
    stability_error = 5,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode exit_code() const { return code_; }

private:
    ExitCode code_;
};

/// Invalid argument values (out-of-range parameters, mismatched grids, ...).
struct ParameterError : Error {
    explicit ParameterError(const std::string& what) : Error(ExitCode::config_error, what) {}
};

/// Malformed or incomplete run configuration.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(ExitCode::config_error, what) {}
};

/// Evaluation outside the mathematical domain (singular points, Re z < 0, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ExitCode::domain_error, what) {}
};

/// A divergent integral. May carry the regularized value obtained with cutoffs.
struct DivergenceError : Error {
    explicit DivergenceError(const std::string& what, double regularized = 0.0,
                             bool has_regularized = false)
        : Error(ExitCode::domain_error, what),
          regularized_value(regularized),
          has_regularized_value(has_regularized) {}
    double regularized_value;
    bool has_regularized_value;
};

/// An iteration or refinement budget was exhausted before the target accuracy.
struct NumericalResolutionError : Error {
    explicit NumericalResolutionError(const std::string& what)
        : Error(ExitCode::numerical_resolution, what) {}
};

/// Requested quantity is undefined for a linearly unstable background.
struct StabilityError : Error {
    explicit StabilityError(const std::string& what) : Error(ExitCode::stability_error, what) {}
};

/// Time step above the pre-flight stability bound.
struct StepSizeError : Error {
    explicit StepSizeError(const std::string& what) : Error(ExitCode::config_error, what) {}
};

}  // namespace kinet

#endif
