#pragma once

#include <stdexcept>
#include <string>

namespace spdmean {

// Input or construction-time validation failure (bad dimensions, asymmetry,
// indefinite matrix, malformed weights, ...).  CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix offered as positive definite failed the eigenvalue check.
// Carries the offending eigenvalue so callers can report it.
class NotPositiveDefiniteError : public ValidationError {
public:
    NotPositiveDefiniteError(const std::string& what, double offending_eigenvalue)
        : ValidationError(what), offending_eigenvalue_(offending_eigenvalue) {}

    double offending_eigenvalue() const { return offending_eigenvalue_; }

private:
    double offending_eigenvalue_;
};

// An iterative solver hit its iteration cap before reaching tolerance.
// CLI maps these to exit code 2.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double final_residual, int iterations)
        : std::runtime_error(what), final_residual_(final_residual), iterations_(iterations) {}

    double final_residual() const { return final_residual_; }
    int iterations() const { return iterations_; }

private:
    double final_residual_;
    int iterations_;
};

}  // namespace spdmean
