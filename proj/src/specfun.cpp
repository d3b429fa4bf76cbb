#include "xisb/specfun.hpp"

#include <cmath>
#include <limits>

namespace xisb {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double euler_gamma = 0.57721566490153286061;

// Stirling coefficients B_{2j} / (2j (2j-1)), exact rationals.
constexpr double stirling_c[10] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Stirling series for log Gamma, valid once Re z >= 10.
Complex log_gamma_stirling(Complex z) {
    Complex lz = std::log(z);
    Complex acc = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * pi);
    Complex zinv2 = 1.0 / (z * z);
    Complex p = 1.0 / z;
    for (double c : stirling_c) {
        acc += c * p;
        p *= zinv2;
    }
    return acc;
}

bool at_gamma_pole(Complex z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

} // namespace

Complex log_gamma_right(Complex z) {
    // Shift into the Stirling region; the subtraction keeps the value
    // branch-consistent for exp(), which is all callers need.
    Complex shift(0.0, 0.0);
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

Complex gamma(Complex z) {
    if (at_gamma_pole(z)) throw std::domain_error("gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    Complex s = std::sin(pi * z);
    return pi / (s * std::exp(log_gamma_right(1.0 - z)));
}

namespace {

// Alternating-series acceleration weights (Chebyshev polynomial scheme).
// d[j] = n * sum_{i<=j} (n+i-1)! 4^i / ((n-i)! (2i)!), computed by ratio
// recurrence; magnitudes stay below ~(3+sqrt8)^n, safe in double for n <= 350.
std::vector<double> eta_weights(int n) {
    std::vector<double> d(static_cast<size_t>(n) + 1);
    double t = 1.0;     // i = 0 term
    double s = 1.0;
    d[0] = static_cast<double>(n);
    for (int i = 1; i <= n; ++i) {
        t *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
        s += t;
        d[static_cast<size_t>(i)] = n * s;
    }
    return d;
}

int eta_term_count(Complex s, const SeriesPrecision& prec) {
    double t = std::abs(s.imag());
    double target = std::min(prec.abs_tol, prec.rel_tol) * 1e-2;
    if (target < 1e-17) target = 1e-17;
    const double log_ratio = 1.7627471740390861; // log(3 + sqrt 8)
    double need = (0.5 * pi * t - std::log(target) + std::log1p(2.0 * t)) / log_ratio;
    int n = static_cast<int>(std::ceil(need)) + 4;
    if (n < 24) n = 24;
    if (n > 350)
        throw convergence_error("zeta: |Im s| too large for the alternating-series weights");
    return n;
}

// eta(s) = (1 - 2^{1-s}) zeta(s), accelerated alternating series.
Complex eta_series(Complex s, const SeriesPrecision& prec) {
    int n = eta_term_count(s, prec);
    std::vector<double> d = eta_weights(n);
    Complex acc(0.0, 0.0);
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        Complex term = sign * (d[static_cast<size_t>(k)] - d[static_cast<size_t>(n)]) *
                       std::exp(-s * std::log(static_cast<double>(k + 1)));
        acc += term;
        sign = -sign;
    }
    return -acc / d[static_cast<size_t>(n)];
}

// expm1(u)/u, stable near u = 0.
Complex phi1(Complex u) {
    if (std::abs(u) < 0.5) {
        Complex acc(1.0, 0.0);
        Complex p(1.0, 0.0);
        double fact = 1.0;
        for (int m = 1; m < 20; ++m) {
            p *= u;
            fact *= static_cast<double>(m + 1);
            acc += p / fact;
        }
        return acc;
    }
    return (std::exp(u) - 1.0) / u;
}

Complex sinc(Complex w) {
    if (std::abs(w) < 1e-2) {
        Complex w2 = w * w;
        return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
    }
    return std::sin(w) / w;
}

constexpr double ln2 = 0.69314718055994530942;

// sin(pi s / 2) * zeta(1 - s), finite at s = 0 where the two factors
// degenerate; the eta form keeps the product stable in a disc around 0.
Complex sin_zeta_reflected(Complex s, const SeriesPrecision& prec) {
    Complex eta = eta_series(1.0 - s, prec);
    if (std::abs(s) < 0.25) {
        return -(pi / (2.0 * ln2)) * sinc(0.5 * pi * s) * eta / phi1(s * ln2);
    }
    Complex denom = 1.0 - std::exp(s * ln2);
    return std::sin(0.5 * pi * s) * eta / denom;
}

} // namespace

Complex zeta(Complex s, const SeriesPrecision& prec) {
    prec.validate();
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        throw std::domain_error("zeta: pole at s = 1");
    if (s.real() >= 0.5) {
        Complex denom = 1.0 - std::exp((1.0 - s) * ln2);
        return eta_series(s, prec) / denom;
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    Complex pref = std::exp(s * ln2) * std::exp((s - 1.0) * std::log(pi)) * gamma(1.0 - s);
    return pref * sin_zeta_reflected(s, prec);
}

Complex zeta1(Complex s, const SeriesPrecision& prec) {
    prec.validate();
    if (s.real() >= 0.5) {
        // (s-1)/(1 - 2^{1-s}) = 1 / (ln2 * phi1((1-s) ln2)), removable at s = 1.
        Complex u = (1.0 - s) * ln2;
        return eta_series(s, prec) / (ln2 * phi1(u));
    }
    Complex pref = std::exp(s * ln2) * std::exp((s - 1.0) * std::log(pi)) * gamma(1.0 - s);
    return (s - 1.0) * pref * sin_zeta_reflected(s, prec);
}

Complex xi(Complex s) {
    // s Gamma(s/2) = 2 Gamma(s/2 + 1) removes the s = 0 pole exactly;
    // zeta1 removes the s = 1 pole. Near the trivial-zero points the
    // Gamma factor poles; evaluate the reflected point instead.
    if (s.imag() == 0.0 && s.real() < -1.0) {
        double r = s.real();
        double nearest = -2.0 * std::round(-r / 2.0);
        if (std::abs(r - nearest) < 1e-8) return xi(1.0 - s);
    }
    Complex g = gamma(0.5 * s + 1.0);
    Complex p = std::exp(-0.5 * s * std::log(pi));
    return g * p * zeta1(s);
}

namespace {

// Ascending series for K0, K1 on (0, 2]; every term is positive for K0.
double bessel_k_series(int order, double x) {
    double q = 0.25 * x * x;
    double lh = -std::log(0.5 * x); // positive on (0,2)
    if (order == 0) {
        // K0 = (lh - gamma) I0 + sum_{m>=1} H_m q^m / (m!)^2
        double term = 1.0;
        double hm = 0.0;
        double i0 = 1.0;
        double corr = 0.0;
        for (int m = 1; m <= 60; ++m) {
            term *= q / (static_cast<double>(m) * m);
            hm += 1.0 / m;
            i0 += term;
            corr += term * hm;
            if (term < 1e-18 * i0) break;
        }
        return (lh - euler_gamma) * i0 + corr;
    }
    // K1 = 1/x - lh * I1 - (x/4) sum_m [psi(m+1)+psi(m+2)] q^m / (m! (m+1)!)
    double i1 = 0.5 * x;
    double term_i = 0.5 * x;
    double term_s = 1.0; // q^m / (m!(m+1)!)
    double hm = 0.0, hm1 = 1.0;
    double acc = term_s * (hm + hm1 - 2.0 * euler_gamma);
    for (int m = 1; m <= 60; ++m) {
        term_i *= q / (static_cast<double>(m) * (m + 1));
        i1 += term_i;
        term_s *= q / (static_cast<double>(m) * (m + 1));
        hm += 1.0 / m;
        hm1 += 1.0 / (m + 1.0);
        acc += term_s * (hm + hm1 - 2.0 * euler_gamma);
        if (term_i < 1e-18 * i1 && term_s * (hm + hm1) < 1e-18) break;
    }
    return 1.0 / x - lh * i1 - 0.25 * x * acc;
}

// Trapezoid on K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
// The integrand is analytic and even; step ~0.5/sqrt(x) reaches ~1e-15.
double bessel_k_integral(int order, double x) {
    double h = std::min(0.25, 0.5 / std::sqrt(x));
    double acc = 0.5 * std::exp(-x); // t = 0, half weight
    for (int j = 1; j < 100000; ++j) {
        double t = h * j;
        double c = std::cosh(t);
        double e = std::exp(-x * c);
        double term = (order == 0) ? e : e * std::cosh(t);
        acc += term;
        // <= so an exact-zero term still breaks when 1e-18 * acc underflows
        // (acc can be subnormal here); otherwise cosh would overflow first.
        if (term <= 1e-18 * acc && x * (c - 1.0) > 42.0) break;
    }
    return h * acc;
}

} // namespace

double bessel_k(int order, double x) {
    if (order != 0 && order != 1) throw std::invalid_argument("bessel_k: order must be 0 or 1");
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    // Past 740 the leading exp(-x) underflows; with it the t = 0 trapezoid
    // seed would be exactly zero and the stop rule could never arm.
    if (std::isinf(x) || x > 740.0) return 0.0;
    if (x <= 2.0) return bessel_k_series(order, x);
    return bessel_k_integral(order, x);
}

DivisorTable::DivisorTable(int k, std::vector<std::int64_t> values)
    : k_(k), limit_(static_cast<int>(values.size()) - 1), values_(std::move(values)) {}

DivisorTable DivisorTable::build(int k, int limit, std::int64_t budget) {
    if (k < 1) throw std::invalid_argument("DivisorTable: k must be >= 1");
    if (limit < 1) throw std::invalid_argument("DivisorTable: limit must be >= 1");
    if (static_cast<std::int64_t>(k) * limit > budget)
        throw resource_error("DivisorTable: k * limit exceeds the work budget");

    std::vector<std::int64_t> a(static_cast<size_t>(limit) + 1, 1);
    a[0] = 0;
    for (int round = 2; round <= k; ++round) {
        std::vector<std::int64_t> b(static_cast<size_t>(limit) + 1, 0);
        for (int d = 1; d <= limit; ++d) {
            std::int64_t ad = a[static_cast<size_t>(d)];
            for (int m = d; m <= limit; m += d) {
                if (__builtin_add_overflow(b[static_cast<size_t>(m)], ad, &b[static_cast<size_t>(m)]))
                    throw std::overflow_error("DivisorTable: 64-bit overflow in convolution");
            }
        }
        a = std::move(b);
    }
    return DivisorTable(k, std::move(a));
}

std::int64_t DivisorTable::operator()(int n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("DivisorTable: index outside table");
    return values_[static_cast<size_t>(n)];
}

} // namespace xisb
