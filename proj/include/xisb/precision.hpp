#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace xisb {

using Complex = std::complex<double>;

/// Thrown when an iterative scheme fails to reach its tolerance within budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a series cannot be truncated to tolerance with the resources
/// it was given (for example a divisor table that is too short).
class truncation_error : public convergence_error {
public:
    explicit truncation_error(const std::string& msg) : convergence_error(msg) {}
};

/// Thrown when a contour tail fails the doubling check.
class tail_error : public convergence_error {
public:
    explicit tail_error(const std::string& msg) : convergence_error(msg) {}
};

/// Thrown when a request exceeds the configured work budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Truncation control for series evaluation.
struct SeriesPrecision {
    int max_terms = 200000;
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;

    void validate() const {
        if (max_terms < 8) throw std::invalid_argument("SeriesPrecision: max_terms must be >= 8");
        if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw std::invalid_argument("SeriesPrecision: abs_tol must lie in (0,1)");
        if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("SeriesPrecision: rel_tol must lie in (0,1)");
    }
};

/// Comparison rule used throughout: a measured value agrees with a reference
/// when |measured - reference| <= tol * (1 + |reference|).
inline bool agrees(double measured, double reference, double tol) {
    return std::abs(measured - reference) <= tol * (1.0 + std::abs(reference));
}

inline double rel_gap(double measured, double reference) {
    return std::abs(measured - reference) / (1.0 + std::abs(reference));
}

} // namespace xisb
