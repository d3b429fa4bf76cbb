#pragma once

#include <memory>

#include "xisb/mellin.hpp"
#include "xisb/specfun.hpp"

namespace xisb {

/// theta(x) = 2 x^2 sum_{n>=1} (2 pi^2 n^4 x^2 - 3 pi n^2) e^{-pi n^2 x^2}.
/// Satisfies x theta(x) = theta(1/x); its Mellin transform is the completed
/// zeta. Evaluated by the series on x >= 1, where every term is positive,
/// and by the reflection below, where the raw series cancels catastrophically.
double theta(double x, const SeriesPrecision& prec = {});

/// The raw series with no reflection. Exposed so agreement between the two
/// routes stays a genuine two-sided check.
double theta_series(double x, const SeriesPrecision& prec = {});

/// d/dx of theta: term-by-term derivative plus the reflected form below 1.
double theta_prime(double x, const SeriesPrecision& prec = {});

/// w_1(x) = 2 sum e^{-pi n^2 x^2}: the k = 1 inversion kernel.
double w1(double x);

/// d/dx of w_1: -4 pi x sum n^2 e^{-pi n^2 x^2}. The claimed derivative form
/// of the k = 1 CDF is exact for this kernel (and not for theta).
double w1_prime(double x);

/// w_2(x) = 4 sum d_2(n) K_0(2 pi n x): the k = 2 kernel, all terms positive.
/// Throws truncation_error if the divisor table cannot cover the tail.
double w2(double x, const DivisorTable& d2, const SeriesPrecision& prec = {});

/// Kernel dispatch for k in {1, 2}; divisors required when k = 2.
double w_series(int k, double x, const SeriesPrecision& prec = {},
                const DivisorTable* divisors = nullptr);

/// v_1 = D(w_1) term by term: sum (8 a^2 - 12 a) e^{-a}, a = pi n^2 x^2.
/// Identically 2 theta; the identity is asserted in tests, not assumed here.
double v1(double x, const SeriesPrecision& prec = {});
double v1_series(double x, const SeriesPrecision& prec = {});

/// v_2 = D^2(w_2) by exact term-by-term differentiation of the K_0 series:
/// 4 sum d_2(n) [ (b^4 + 9 b^2) K_0(b) - 6 b^3 K_1(b) ], b = 2 pi n x.
/// This is the canonical route; v2 reflects below x = 1, v2_series is raw.
double v2(double x, const DivisorTable& d2, const SeriesPrecision& prec = {});
double v2_series(double x, const DivisorTable& d2, const SeriesPrecision& prec = {});

/// The k = 2 series in the exact shape the source states it. Kept callable
/// so the mismatch against the canonical route stays measurable.
double v2_printed_series(double x, const DivisorTable& d2, const SeriesPrecision& prec = {});

/// v_k for any k >= 1: one-shot Mellin inversion of (2 xi(s))^k on Re s = c.
double v_general(int k, double x, const ContourSpec& spec);
double v_general(int k, double x);

/// Sampled-contour form of v_general for repeated evaluation at many x.
class VkEval {
public:
    explicit VkEval(int k);
    VkEval(int k, const ContourSpec& spec);

    static ContourSpec default_spec(int k);
    static Complex transform(int k, Complex s); // (2 xi(s))^k

    int k() const { return k_; }
    double operator()(double x) const;
    double density(double x) const { return (*this)(x) / x; }

private:
    int k_;
    std::shared_ptr<const ContourCache> cache_;
};

/// Closed-form CDF of the k = 1 law: 4 pi x^{-3} sum n^2 e^{-pi n^2 / x^2}.
/// Monotone, 0 at 0+, 1 at infinity; truncation carries a certified
/// geometric tail bound.
double cdf_k1(double x, const SeriesPrecision& prec = {});

} // namespace xisb
