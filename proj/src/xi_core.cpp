#include "xisb/xi_core.hpp"

#include <algorithm>
#include <cmath>

namespace xisb {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 6.28318530717958647692;

// Below this the reflected argument 1/x overflows; every kernel here is
// already far below double underflow by then.
constexpr double reflect_floor = 1e-290;

// exp(-a) underflows past a ~ 745; stop a little early.
constexpr double exp_floor = 740.0;

} // namespace

double theta_series(double x, const SeriesPrecision& prec) {
    prec.validate();
    if (!(x > 0.0)) throw std::domain_error("theta_series: requires x > 0");
    if (!std::isfinite(x) || pi * x * x > exp_floor) return 0.0;
    // In a = pi n^2 x^2 the summand is (4a^2 - 6a) e^{-a}; every term is
    // positive once a > 3/2, which holds for all n when x >= 1.
    double acc = 0.0;
    double peak = 1.0 / x + 4.0;
    for (int n = 1; n <= prec.max_terms; ++n) {
        double a = pi * static_cast<double>(n) * n * x * x;
        if (a > exp_floor && n > peak) break;
        double term = (4.0 * a * a - 6.0 * a) * std::exp(-a);
        acc += term;
        if (std::abs(term) < prec.abs_tol * (1.0 + std::abs(acc)) && n > peak) break;
        if (n == prec.max_terms)
            throw convergence_error("theta_series: term budget exhausted");
    }
    return acc;
}

double theta(double x, const SeriesPrecision& prec) {
    if (!(x > 0.0)) throw std::domain_error("theta: requires x > 0");
    if (x < reflect_floor) return 0.0;
    // x theta(x) = theta(1/x): evaluate on x >= 1 where the series has no
    // cancellation, reflect otherwise.
    if (x >= 1.0) return theta_series(x, prec);
    return theta_series(1.0 / x, prec) / x;
}

namespace {

double theta_prime_series(double x, const SeriesPrecision& prec) {
    prec.validate();
    if (!std::isfinite(x) || pi * x * x > exp_floor) return 0.0;
    double acc = 0.0;
    double peak = 1.0 / x + 4.0;
    for (int n = 1; n <= prec.max_terms; ++n) {
        double a = pi * static_cast<double>(n) * n * x * x;
        if (a > exp_floor && n > peak) break;
        double term = (-8.0 * a * a * a + 28.0 * a * a - 12.0 * a) * std::exp(-a) / x;
        acc += term;
        if (std::abs(term) < prec.abs_tol * (1.0 + std::abs(acc)) && n > peak) break;
        if (n == prec.max_terms)
            throw convergence_error("theta_prime_series: term budget exhausted");
    }
    return acc;
}

} // namespace

double theta_prime(double x, const SeriesPrecision& prec) {
    if (!(x > 0.0)) throw std::domain_error("theta_prime: requires x > 0");
    if (x < reflect_floor) return 0.0;
    if (x >= 1.0) return theta_prime_series(x, prec);
    // Differentiate theta(x) = theta(1/x)/x.
    double inv = 1.0 / x;
    return -theta(inv, prec) / (x * x) - theta_prime_series(inv, prec) / (x * x * x);
}

namespace {

double w1_series(double x) {
    double acc = 0.0;
    for (int n = 1; n <= 400000; ++n) {
        double a = pi * static_cast<double>(n) * n * x * x;
        if (a > exp_floor) break;
        double term = std::exp(-a);
        acc += term;
        if (term < 1e-17 * (1.0 + acc)) break;
        if (n == 400000) throw convergence_error("w1: term budget exhausted");
    }
    return 2.0 * acc;
}

double w1_prime_series(double x) {
    double acc = 0.0;
    for (int n = 1; n <= 400000; ++n) {
        double nn = static_cast<double>(n) * n;
        double a = pi * nn * x * x;
        if (a > exp_floor) break;
        double term = nn * std::exp(-a);
        acc += term;
        if (term < 1e-17 * (1.0 + acc)) break;
        if (n == 400000) throw convergence_error("w1_prime: term budget exhausted");
    }
    return -4.0 * pi * x * acc;
}

} // namespace

double w1(double x) {
    if (!(x > 0.0)) throw std::domain_error("w1: requires x > 0");
    if (!std::isfinite(x) || pi * x * x > exp_floor) return 0.0;
    if (x >= 1.0) return w1_series(x);
    // Jacobi: w1(x) = (w1(1/x) + 1)/x - 1; below 1 the raw sum needs ~1/x
    // terms, while the reflected sum needs a handful.
    if (x < reflect_floor) return 1.0 / x - 1.0;
    return (w1_series(1.0 / x) + 1.0) / x - 1.0;
}

double w1_prime(double x) {
    if (!(x > 0.0)) throw std::domain_error("w1_prime: requires x > 0");
    if (!std::isfinite(x) || pi * x * x > exp_floor) return 0.0;
    if (x >= 1.0) return w1_prime_series(x);
    // Derivative of the reflection above.
    if (x < reflect_floor) return -1.0 / (x * x);
    double inv = 1.0 / x;
    return -(w1_series(inv) + 1.0) / (x * x) - w1_prime_series(inv) / (x * x * x);
}

namespace {

double w2_sum(double x, const DivisorTable& d2, const SeriesPrecision& prec) {
    double acc = 0.0;
    int quiet = 0;
    for (int n = 1;; ++n) {
        if (n > d2.limit())
            throw truncation_error("w2: divisor table ends before the tail is spent");
        double term = static_cast<double>(d2(n)) * bessel_k(0, two_pi * n * x);
        acc += term;
        quiet = (term < prec.abs_tol * (1.0 + acc)) ? quiet + 1 : 0;
        if (quiet >= 3) break;
    }
    return 4.0 * acc;
}

} // namespace

double w2(double x, const DivisorTable& d2, const SeriesPrecision& prec) {
    prec.validate();
    if (!(x > 0.0)) throw std::domain_error("w2: requires x > 0");
    if (!std::isfinite(x) || two_pi * x > exp_floor) return 0.0;
    if (d2.k() != 2) throw std::invalid_argument("w2: needs a d_2 table");
    if (x >= 1.0) return w2_sum(x, d2, prec);
    // The transform of w2 is the square of the completed zeta, so the double
    // poles at s = 0 and s = 1 add logarithmic terms to the reflection:
    //   w2(x) = w2(1/x)/x + (log(1/x) + g - log 4pi)/x + log(1/x) + log 4pi - g
    // with g the Euler constant. Checked against the raw sum to 1e-15.
    constexpr double euler = 0.57721566490153286061;
    const double ln4pi = std::log(4.0 * pi);
    double L = std::log(1.0 / x);
    double tail = (x < reflect_floor) ? 0.0 : w2_sum(1.0 / x, d2, prec);
    return tail / x + (L + euler - ln4pi) / x + L + ln4pi - euler;
}

double v1_series(double x, const SeriesPrecision& prec) {
    prec.validate();
    if (!(x > 0.0)) throw std::domain_error("v1_series: requires x > 0");
    if (!std::isfinite(x) || pi * x * x > exp_floor) return 0.0;
    double acc = 0.0;
    double peak = 1.0 / x + 4.0;
    for (int n = 1; n <= prec.max_terms; ++n) {
        double a = pi * static_cast<double>(n) * n * x * x;
        if (a > exp_floor && n > peak) break;
        double term = (8.0 * a * a - 12.0 * a) * std::exp(-a);
        acc += term;
        if (std::abs(term) < prec.abs_tol * (1.0 + std::abs(acc)) && n > peak) break;
        if (n == prec.max_terms)
            throw convergence_error("v1_series: term budget exhausted");
    }
    return acc;
}

double v1(double x, const SeriesPrecision& prec) {
    if (!(x > 0.0)) throw std::domain_error("v1: requires x > 0");
    if (x < reflect_floor) return 0.0;
    if (x >= 1.0) return v1_series(x, prec);
    return v1_series(1.0 / x, prec) / x;
}

double w_series(int k, double x, const SeriesPrecision& prec, const DivisorTable* divisors) {
    if (k == 1) return w1(x);
    if (k == 2) {
        if (divisors == nullptr) throw std::invalid_argument("w_series: k = 2 needs a divisor table");
        return w2(x, *divisors, prec);
    }
    throw std::invalid_argument("w_series: closed kernels exist for k in {1, 2} only");
}

double v2_series(double x, const DivisorTable& d2, const SeriesPrecision& prec) {
    prec.validate();
    if (!(x > 0.0)) throw std::domain_error("v2_series: requires x > 0");
    if (!std::isfinite(x) || two_pi * x > exp_floor) return 0.0;
    if (d2.k() != 2) throw std::invalid_argument("v2_series: needs a d_2 table");
    // In b = 2 pi n x the summand is 4 d_2(n) [ (b^4 + 9 b^2) K_0(b) - 6 b^3 K_1(b) ];
    // positive once b >= 2 pi, so no cancellation on x >= 1.
    double acc = 0.0;
    int quiet = 0;
    for (int n = 1;; ++n) {
        if (n > d2.limit())
            throw truncation_error("v2_series: divisor table ends before the tail is spent");
        double b = two_pi * n * x;
        double k0 = bessel_k(0, b);
        double k1v = bessel_k(1, b);
        double term = 4.0 * static_cast<double>(d2(n)) *
                      ((b * b * b * b + 9.0 * b * b) * k0 - 6.0 * b * b * b * k1v);
        acc += term;
        quiet = (std::abs(term) < prec.abs_tol * (1.0 + std::abs(acc))) ? quiet + 1 : 0;
        if (quiet >= 3) break;
    }
    return acc;
}

double v2(double x, const DivisorTable& d2, const SeriesPrecision& prec) {
    if (!(x > 0.0)) throw std::domain_error("v2: requires x > 0");
    if (x < reflect_floor) return 0.0;
    if (x >= 1.0) return v2_series(x, d2, prec);
    return v2_series(1.0 / x, d2, prec) / x;
}

double v2_printed_series(double x, const DivisorTable& d2, const SeriesPrecision& prec) {
    prec.validate();
    if (!(x > 0.0)) throw std::domain_error("v2_printed_series: requires x > 0");
    if (!std::isfinite(x) || two_pi * x > exp_floor) return 0.0;
    if (d2.k() != 2) throw std::invalid_argument("v2_printed_series: needs a d_2 table");
    double acc = 0.0;
    int quiet = 0;
    for (int n = 1;; ++n) {
        if (n > d2.limit())
            throw truncation_error("v2_printed_series: divisor table ends before the tail is spent");
        double c = two_pi * n;
        double k0 = bessel_k(0, c * x);
        double k1v = bessel_k(1, c * x);
        double term = -static_cast<double>(d2(n)) *
                      (2.0 * c * x * k1v - c * c * x * k1v - c * c * k0);
        acc += term;
        quiet = (std::abs(term) < prec.abs_tol * (1.0 + std::abs(acc))) ? quiet + 1 : 0;
        if (quiet >= 3) break;
    }
    return acc;
}

ContourSpec VkEval::default_spec(int k) {
    ContourSpec spec;
    spec.c = 2.0;
    spec.half_height = (k <= 1) ? 60.0 : (k == 2 ? 40.0 : 32.0);
    spec.step = 0.1;
    spec.tol = 1e-10;
    return spec;
}

Complex VkEval::transform(int k, Complex s) {
    // (s(s-1) Gamma(s/2) zeta(s) pi^{-s/2})^k written through the completed
    // zeta, which carries no pole on the contour.
    Complex base = 2.0 * xi(s);
    Complex acc(1.0, 0.0);
    for (int i = 0; i < k; ++i) acc *= base;
    return acc;
}

VkEval::VkEval(int k) : VkEval(k, default_spec(k)) {}

VkEval::VkEval(int k, const ContourSpec& spec) : k_(k) {
    if (k < 1 || k > 8) throw std::invalid_argument("VkEval: k must lie in [1, 8]");
    auto F = [k](Complex s) { return transform(k, s); };
    cache_ = std::make_shared<const ContourCache>(F, spec);
}

double VkEval::operator()(double x) const { return cache_->eval(x); }

double v_general(int k, double x, const ContourSpec& spec) {
    if (k < 1) throw std::invalid_argument("v_general: k must be >= 1");
    auto F = [k](Complex s) { return VkEval::transform(k, s); };
    return inverse_mellin(F, x, spec);
}

double v_general(int k, double x) { return v_general(k, x, VkEval::default_spec(k)); }

double cdf_k1(double x, const SeriesPrecision& prec) {
    prec.validate();
    if (!(x > 0.0)) return 0.0;
    if (x >= 50.0) return 1.0; // deficit is O(exp(-pi x^2)), far below double eps
    if (x >= 1.0) {
        // Complementary form of the same modular identity:
        //   1 - F(x) = sum_m (4 pi m^2 x^2 - 2) e^{-pi m^2 x^2}.
        // Terms are positive and strictly decreasing in x, so the deficit is
        // computed to relative accuracy and F stays monotone up to the point
        // where the deficit underflows; the direct sum instead wobbles by a
        // few ulp around 1 once the true deficit drops below machine eps.
        double tail = 0.0;
        for (int m = 1;; ++m) {
            double b = pi * static_cast<double>(m) * m * x * x;
            if (b > exp_floor) break;
            double term = (4.0 * b - 2.0) * std::exp(-b);
            tail += term;
            if (term < 1e-18 * tail) break;
        }
        return 1.0 - tail;
    }
    double q = pi / (x * x);
    double acc = 0.0;
    double peak = 1.0 / std::sqrt(q);
    for (int n = 1; n <= prec.max_terms; ++n) {
        double nn = static_cast<double>(n) * n;
        double a = q * nn;
        if (a > exp_floor && n > 2.0 * peak) break;
        double term = nn * std::exp(-a);
        acc += term;
        if (n > 2.0 * peak + 4.0) {
            // Past twice the mode the ratio term(n+1)/term(n) is below
            // (9/4) e^{-q(2n+1)} < 1/2, giving a certified geometric tail.
            double ratio = 2.25 * std::exp(-q * (2.0 * n + 1.0));
            if (ratio < 0.5 && term * ratio / (1.0 - ratio) < prec.abs_tol * (1.0 + acc)) break;
        }
        if (n == prec.max_terms)
            throw convergence_error("cdf_k1: term budget exhausted");
    }
    return 4.0 * pi * acc / (x * x * x);
}

} // namespace xisb
