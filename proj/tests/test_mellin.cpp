#include <cmath>

#include "doctest.h"
#include "xisb/mellin.hpp"
#include "xisb/specfun.hpp"

using xisb::Complex;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("gauss nodes integrate smooth things to machine accuracy") {
    double cubic = xisb::gauss16([](double x) { return x * x * x; }, 0.0, 1.0);
    CHECK(std::abs(cubic - 0.25) < 1e-15);
    double s = xisb::gauss16([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(std::abs(s - 2.0) < 1e-13);
}

TEST_CASE("double-exponential rules hit exact integrals") {
    xisb::QuadratureSpec q;
    double g = xisb::integrate_real_line([](double u) { return std::exp(-u * u); }, q);
    CHECK(std::abs(g - std::sqrt(pi)) < 1e-12);
    Complex osc = xisb::integrate_real_line_c(
        [](double u) { return std::exp(Complex(-u * u, u)); }, q);
    CHECK(std::abs(osc - std::sqrt(pi) * std::exp(-0.25)) < 1e-12);
    double e1 = xisb::integrate_half_line([](double y) { return std::exp(-y); }, q);
    CHECK(std::abs(e1 - 1.0) < 1e-12);
    double m2 = xisb::integrate_half_line([](double y) { return y * y * std::exp(-y * y); }, q);
    CHECK(std::abs(m2 - std::sqrt(pi) / 4.0) < 1e-12);
    // endpoint singularity y^{-1/2}
    double root = xisb::integrate_half_line(
        [](double y) { return std::exp(-y) / std::sqrt(y); }, q);
    CHECK(std::abs(root - std::sqrt(pi)) < 1e-10);
}

TEST_CASE("a slowly decaying integrand is refused rather than mis-summed") {
    xisb::QuadratureSpec q;
    CHECK_THROWS_AS((void)xisb::integrate_half_line([](double y) { return 1.0 / (1.0 + y); }, q),
                    xisb::convergence_error);
}

TEST_CASE("mellin transform of exp(-x) is gamma") {
    xisb::QuadratureSpec q;
    auto f = [](double x) { return std::exp(-x); };
    for (Complex s : {Complex(2.5, 0.0), Complex(1.0, 3.0), Complex(0.5, -2.0)}) {
        Complex lhs = xisb::mellin_transform(f, s, q);
        CHECK(std::abs(lhs - xisb::gamma(s)) < 1e-10 * (1.0 + std::abs(xisb::gamma(s))));
    }
    auto g = [](double x) { return std::exp(-x * x); };
    Complex half = xisb::mellin_transform(g, Complex(3.0, 0.0), q);
    CHECK(std::abs(half - std::sqrt(pi) / 4.0) < 1e-11); // (1/2) Gamma(3/2)
}

TEST_CASE("contour inversion of gamma recovers exp(-x)") {
    xisb::ContourSpec spec;
    spec.c = 2.0;
    spec.half_height = 40.0;
    spec.step = 0.05;
    auto F = [](Complex s) { return xisb::gamma(s); };
    for (double x : {0.3, 1.0, 2.0, 4.5}) {
        CHECK(std::abs(xisb::inverse_mellin(F, x, spec) - std::exp(-x)) < 1e-9);
    }
}

TEST_CASE("inversion is invariant under contour shifts and refinement") {
    auto F = [](Complex s) { return xisb::gamma(s); };
    xisb::ContourSpec a;
    a.c = 1.5;
    a.half_height = 40.0;
    a.step = 0.1;
    xisb::ContourSpec b = a;
    b.c = 2.5;
    double va = xisb::inverse_mellin(F, 1.3, a);
    double vb = xisb::inverse_mellin(F, 1.3, b);
    CHECK(std::abs(va - vb) < 1e-9);
    xisb::ContourSpec fine = a;
    fine.step = 0.05;
    fine.half_height = 80.0;
    double vf = xisb::inverse_mellin(F, 1.3, fine);
    CHECK(std::abs(va - vf) < 1e-9);
}

TEST_CASE("a contour with visible tail mass is rejected") {
    xisb::ContourSpec spec;
    spec.c = 2.0;
    spec.half_height = 30.0;
    spec.step = 0.1;
    auto slow = [](Complex s) { return 1.0 / s; };
    CHECK_THROWS_AS((void)xisb::inverse_mellin(slow, 1.0, spec), xisb::tail_error);
}

TEST_CASE("the cached contour agrees with the one-shot inversion") {
    xisb::ContourSpec spec;
    spec.c = 2.0;
    spec.half_height = 40.0;
    spec.step = 0.05;
    auto F = [](Complex s) { return xisb::gamma(s); };
    xisb::ContourCache cache(F, spec);
    CHECK(cache.node_count() > 100);
    for (double x : {0.4, 1.0, 3.2}) {
        CHECK(std::abs(cache.eval(x) - xisb::inverse_mellin(F, x, spec)) < 1e-12);
        CHECK(std::abs(cache.eval(x) - std::exp(-x)) < 1e-9);
    }
}

TEST_CASE("spec validation refuses nonsense") {
    xisb::ContourSpec bad;
    bad.c = 0.5; // must sit right of s = 1
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    xisb::QuadratureSpec q;
    q.tol = 0.0;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}
