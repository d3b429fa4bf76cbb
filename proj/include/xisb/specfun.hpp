#pragma once

#include <cstdint>
#include <vector>

#include "xisb/precision.hpp"

namespace xisb {

/// Gamma function for complex argument.
/// Stirling series after a recurrence shift to Re z >= 10, reflection for
/// Re z < 0.5. Relative accuracy ~1e-14 for |z| <= 50 away from the poles.
/// Throws std::domain_error at the poles (z = 0, -1, -2, ...).
Complex gamma(Complex z);

/// log Gamma on Re z >= 0.5 (principal branch continuous along the shift).
Complex log_gamma_right(Complex z);

/// Riemann zeta for complex s != 1.
/// Alternating (eta) series with Chebyshev acceleration for Re s >= 1/2,
/// reflection formula below. Throws std::domain_error at the pole s = 1.
Complex zeta(Complex s, const SeriesPrecision& prec = {});

/// (s - 1) * zeta(s): entire across s = 1, used where the pole must cancel.
Complex zeta1(Complex s, const SeriesPrecision& prec = {});

/// Completed zeta: xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s).
/// Entire; xi(0) = xi(1) = 1/2. Evaluated as Gamma(s/2+1) pi^{-s/2} (s-1) zeta(s)
/// so s = 0 and s = 1 need no limits.
Complex xi(Complex s);

/// Modified Bessel function K_nu for nu in {0, 1} and x > 0.
/// Ascending series for x <= 2, trapezoid on the cosh integral representation
/// for x > 2. Relative accuracy ~1e-13 on [1e-6, 700].
double bessel_k(int order, double x);

/// d_k(n): number of ordered factorizations of n into k positive factors,
/// tabulated for n = 1..limit by iterated Dirichlet convolution.
class DivisorTable {
public:
    /// Work budget: build refuses k * limit beyond this unless overridden.
    static constexpr std::int64_t default_budget = 100000000;

    static DivisorTable build(int k, int limit, std::int64_t budget = default_budget);

    int k() const { return k_; }
    int limit() const { return limit_; }

    /// d_k(n); throws std::out_of_range beyond the table.
    std::int64_t operator()(int n) const;

private:
    DivisorTable(int k, std::vector<std::int64_t> values);
    int k_;
    int limit_;
    std::vector<std::int64_t> values_;
};

} // namespace xisb
