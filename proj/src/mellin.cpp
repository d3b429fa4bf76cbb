#include "xisb/mellin.hpp"

#include <cmath>

namespace xisb {

namespace {

constexpr double two_pi = 6.28318530717958647692;

} // namespace

Complex mellin_transform(const std::function<double(double)>& f, Complex s,
                         const QuadratureSpec& spec) {
    // x = e^u maps the transform to int_R e^{su} f(e^u) du. The phase and the
    // magnitude are assembled in log space so that huge |u| cannot turn a
    // zero of f into inf * 0.
    auto integrand = [&](double u) -> Complex {
        double x = std::exp(u);
        if (!std::isfinite(x) || x == 0.0) return Complex(0.0, 0.0);
        double fv = f(x);
        if (fv == 0.0) return Complex(0.0, 0.0);
        double mag = std::exp(s.real() * u + std::log(std::abs(fv)));
        double ph = s.imag() * u;
        double sign = fv > 0.0 ? 1.0 : -1.0;
        return sign * mag * Complex(std::cos(ph), std::sin(ph));
    };
    return integrate_real_line_c(integrand, spec);
}

namespace {

// Shared by the one-shot inversion and the cache: sample F on the upper half
// of the contour; conjugate symmetry F(conj s) = conj F(s) supplies the rest.
std::vector<Complex> sample_contour(const std::function<Complex(Complex)>& F,
                                    const ContourSpec& spec, double upto,
                                    std::vector<double>& t_out) {
    std::vector<Complex> vals;
    for (int j = 0;; ++j) {
        double t = spec.step * j;
        if (t > upto) break;
        t_out.push_back(t);
        vals.push_back(F(Complex(spec.c, t)));
    }
    return vals;
}

} // namespace

double inverse_mellin(const std::function<Complex(Complex)>& F, double x,
                      const ContourSpec& spec) {
    spec.validate();
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("inverse_mellin: requires finite x > 0");

    std::vector<double> t;
    std::vector<Complex> vals = sample_contour(F, spec, 2.0 * spec.half_height, t);

    // Uniform tail bound: phases have modulus one, so the discarded band
    // can contribute at most step/(2pi) * sum |F| over [T, 2T], for every x.
    double band = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j)
        if (t[j] > spec.half_height) band += std::abs(vals[j]);
    band *= 2.0 * spec.step / two_pi;
    if (band > 10.0 * spec.tol)
        throw tail_error("inverse_mellin: contour band [T,2T] still carries weight; raise half_height");

    double lx = std::log(x);
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] > spec.half_height) break;
        Complex phase(std::cos(t[j] * lx), -std::sin(t[j] * lx));
        Complex term = vals[j] * phase;
        // j = 0 counts once; j > 0 stands for the pair t_j and -t_j.
        acc += (j == 0) ? term : term + std::conj(term);
    }
    acc *= spec.step / two_pi * std::exp(-spec.c * lx);
    if (std::abs(acc.imag()) > 1e-8 * (1.0 + std::abs(acc.real())))
        throw convergence_error("inverse_mellin: imaginary residual survived symmetrization");
    return acc.real();
}

ContourCache::ContourCache(const std::function<Complex(Complex)>& F, const ContourSpec& spec)
    : spec_(spec) {
    spec_.validate();
    std::vector<double> t_all;
    std::vector<Complex> vals = sample_contour(F, spec_, 2.0 * spec_.half_height, t_all);

    double band = 0.0;
    for (std::size_t j = 0; j < t_all.size(); ++j)
        if (t_all[j] > spec_.half_height) band += std::abs(vals[j]);
    band *= 2.0 * spec_.step / two_pi;
    if (band > 10.0 * spec_.tol)
        throw tail_error("ContourCache: contour band [T,2T] still carries weight; raise half_height");

    for (std::size_t j = 0; j < t_all.size(); ++j) {
        if (t_all[j] > spec_.half_height) break;
        t_.push_back(t_all[j]);
        weights_.push_back(vals[j] * (spec_.step / two_pi));
    }
}

double ContourCache::eval(double x) const {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("ContourCache::eval: requires finite x > 0");
    double lx = std::log(x);
    double acc = weights_[0].real();
    for (std::size_t j = 1; j < t_.size(); ++j) {
        double c = std::cos(t_[j] * lx);
        double s = std::sin(t_[j] * lx);
        // w e^{-i t lx} + conj(w) e^{+i t lx} = 2 (Re w cos(t lx) + Im w sin(t lx))
        acc += 2.0 * (weights_[j].real() * c + weights_[j].imag() * s);
    }
    return acc * std::exp(-spec_.c * lx);
}

} // namespace xisb
