#pragma once

#include <functional>

#include "xisb/precision.hpp"

namespace xisb {

/// Settings shared by the double-exponential integrators.
struct QuadratureSpec {
    double tol = 1e-12;
    int max_levels = 12;     // each level halves the step
    // Transform-variable cutoff. Integrands with an endpoint singularity up
    // to y^{-1/2} decay like exp(-(pi/4) sinh v) after the map, so the window
    // must be wide enough for that halved rate; 5.0 puts the clipped tail
    // near 1e-25 while the node weights stay far below overflow.
    double vmax = 5.0;

    void validate() const {
        if (!(tol > 0.0 && tol < 0.1)) throw std::invalid_argument("QuadratureSpec: tol must lie in (0, 0.1)");
        if (max_levels < 3 || max_levels > 24) throw std::invalid_argument("QuadratureSpec: max_levels out of range");
        if (!(vmax > 1.0 && vmax < 8.0)) throw std::invalid_argument("QuadratureSpec: vmax out of range");
    }
};

/// Integral over the whole real line via u = sinh((pi/2) sinh v).
/// Converges like exp(-c 2^level) for analytic integrands with
/// at-worst-polynomial growth killed by the supplied decay.
double integrate_real_line(const std::function<double(double)>& f, const QuadratureSpec& spec = {});

/// Same nodes, complex-valued integrand.
Complex integrate_real_line_c(const std::function<Complex(double)>& f, const QuadratureSpec& spec = {});

/// Integral over (0, inf) via y = exp((pi/2) sinh v).
double integrate_half_line(const std::function<double(double)>& f, const QuadratureSpec& spec = {});

/// Fixed 16-point Gauss-Legendre rule on [a, b]; nodes are computed once
/// at first use by Newton iteration on the Legendre polynomial.
double gauss16(const std::function<double(double)>& f, double a, double b);

} // namespace xisb
