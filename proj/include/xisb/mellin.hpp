#pragma once

#include <functional>
#include <vector>

#include "xisb/precision.hpp"
#include "xisb/quadrature.hpp"

namespace xisb {

/// Vertical-line contour Re s = c, |Im s| <= half_height, sampled every step.
/// The inversion integral is truncated at half_height; the constructor of the
/// sampled forms verifies the discarded tail against the tolerance.
struct ContourSpec {
    double c = 2.0;
    double half_height = 60.0;
    double step = 0.1;
    double tol = 1e-10;

    void validate() const {
        if (!(c > 1.0)) throw std::invalid_argument("ContourSpec: c must exceed 1");
        if (!(half_height >= 5.0)) throw std::invalid_argument("ContourSpec: half_height must be >= 5");
        if (!(step > 0.0) || step > half_height / 100.0)
            throw std::invalid_argument("ContourSpec: step must be positive and <= half_height/100");
        if (!(tol > 0.0 && tol < 1e-3)) throw std::invalid_argument("ContourSpec: tol out of range");
    }
};

/// Forward transform int_0^inf x^{s-1} f(x) dx, evaluated in log coordinates.
/// f must decay faster than any power at both ends (after x^{Re s - 1}).
Complex mellin_transform(const std::function<double(double)>& f, Complex s,
                         const QuadratureSpec& spec = {});

/// One-point Mellin inversion (1/2pi) int F(c+it) x^{-c-it} dt by trapezoid
/// on the sampled contour. Throws tail_error when the band [T, 2T] still
/// carries weight, and convergence_error when the imaginary residual of the
/// symmetrized sum survives above 1e-8.
double inverse_mellin(const std::function<Complex(Complex)>& F, double x,
                      const ContourSpec& spec = {});

/// Sampled contour for repeated inversion at many x: g_j = (step/2pi) F(c+it_j)
/// held fixed, each eval is a single pass of complex phases.
class ContourCache {
public:
    ContourCache(const std::function<Complex(Complex)>& F, const ContourSpec& spec);

    double eval(double x) const;
    const ContourSpec& spec() const { return spec_; }
    std::size_t node_count() const { return weights_.size(); }

private:
    ContourSpec spec_;
    std::vector<double> t_;       // nonnegative node ordinates
    std::vector<Complex> weights_; // step/(2pi) * F(c + i t_j)
};

} // namespace xisb
