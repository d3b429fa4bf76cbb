#include "xisb/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace xisb {

namespace {

// Hermite cubic on [x0, x1] with values F0, F1 and slopes m0, m1.
double hermite(double x, double x0, double x1, double F0, double F1, double m0, double m1) {
    double h = x1 - x0;
    double t = (x - x0) / h;
    double t2 = t * t, t3 = t2 * t;
    return F0 * (2.0 * t3 - 3.0 * t2 + 1.0) + m0 * h * (t3 - 2.0 * t2 + t) +
           F1 * (-2.0 * t3 + 3.0 * t2) + m1 * h * (t3 - t2);
}

} // namespace

double XiSizeBiased::vk(double x) const {
    if (!(x > 0.0)) throw std::domain_error("XiSizeBiased::vk: requires x > 0");
    if (!std::isfinite(x) || x > 1e150 || x < 1e-150) return 0.0;
    if (k_ == 1) return v1(x);
    if (k_ == 2) return v2(x, *d2_);
    // Contour truncation noise scales like x^{-c}; the functional equation
    // (verified independently against the raw contour) keeps small x stable.
    if (x >= 1.0) return (*contour_)(x);
    return (*contour_)(1.0 / x) / x;
}

double XiSizeBiased::pdf(double x) const {
    if (!(x > 0.0)) throw std::domain_error("XiSizeBiased::pdf: requires x > 0");
    if (!std::isfinite(x)) return 0.0;
    return norm_ * vk(x) / x;
}

XiSizeBiased XiSizeBiased::build(int k, const DistributionOptions& opt) {
    opt.validate();
    if (k < 1) throw std::invalid_argument("XiSizeBiased: k must be >= 1");
    XiSizeBiased d;
    d.k_ = k;
    d.quad_tol_ = opt.quad_tol;
    if (k == 2) d.d2_ = DivisorTable::build(2, 128);
    if (k >= 3) d.contour_ = VkEval(k, opt.contour.value_or(VkEval::default_spec(k)));

    QuadratureSpec qs;
    qs.tol = opt.quad_tol;
    d.raw_mass_ = integrate_half_line([&d](double x) { return d.vk(x) / x; }, qs);
    if (!(d.raw_mass_ > 0.0))
        throw convergence_error("XiSizeBiased: measured raw mass is not positive");
    d.norm_ = 1.0 / d.raw_mass_;

    d.build_table(opt);
    return d;
}

double XiSizeBiased::cdf_quadrature(double x) const {
    if (!(x > 0.0)) return 0.0;
    if (!tx_.empty() && x > tx_[tx_.size() / 2]) return 1.0 - survival(x);
    QuadratureSpec qs;
    qs.tol = quad_tol_;
    // t = x e^{-y} turns int_0^x v(t)/t dt into a half-line integral; t can
    // underflow to zero at the far nodes, where the integrand is zero anyway.
    double raw = integrate_half_line(
        [this, x](double y) {
            double t = x * std::exp(-y);
            return t > 0.0 ? vk(t) : 0.0;
        },
        qs);
    return norm_ * raw;
}

double XiSizeBiased::survival(double x) const {
    if (!(x > 0.0)) return 1.0;
    QuadratureSpec qs;
    qs.tol = quad_tol_;
    double raw = integrate_half_line([this, x](double y) { return vk(x * std::exp(y)); }, qs);
    return norm_ * raw;
}

void XiSizeBiased::build_table(const DistributionOptions& opt) {
    double lo = opt.table_lo;
    double hi = opt.table_hi;

    // Direct small-x integral; the table is not built yet, so no shortcut.
    QuadratureSpec qs;
    qs.tol = quad_tol_;
    auto head_mass = [this, &qs](double x) {
        return norm_ * integrate_half_line(
                           [this, x](double y) {
                               double t = x * std::exp(-y);
                               return t > 0.0 ? vk(t) : 0.0;
                           },
                           qs);
    };

    double F_lo = head_mass(lo);
    for (int guard = 0; F_lo > 1e-7 && guard < 40; ++guard) {
        lo *= 0.5;
        F_lo = head_mass(lo);
    }
    double S_hi = survival(hi);
    for (int guard = 0; S_hi > 1e-7 && guard < 40; ++guard) {
        hi *= 1.5;
        S_hi = survival(hi);
    }

    int n = opt.table_points;
    tx_.resize(static_cast<size_t>(n));
    tF_.resize(static_cast<size_t>(n));
    double lratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) tx_[static_cast<size_t>(i)] = lo * std::exp(lratio * i);
    tx_.front() = lo;
    tx_.back() = hi;

    tF_.front() = F_lo;
    double acc = F_lo, comp = 0.0;
    for (int i = 1; i < n; ++i) {
        double seg = gauss16([this](double t) { return norm_ * vk(t) / t; },
                             tx_[static_cast<size_t>(i - 1)], tx_[static_cast<size_t>(i)]);
        // Kahan step keeps the cumulative sum deterministic and tight.
        double y = seg - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
        tF_[static_cast<size_t>(i)] = acc;
    }

    double closure = tF_.back() + S_hi;
    if (std::abs(closure - 1.0) > 1e-6)
        throw convergence_error("XiSizeBiased: table mass and tail do not close to 1");

    // Exact slopes (the pdf), clamped into the monotone Hermite region.
    slope_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) slope_[static_cast<size_t>(i)] = pdf(tx_[static_cast<size_t>(i)]);
    for (int i = 0; i < n; ++i) {
        double dl = (i > 0) ? (tF_[static_cast<size_t>(i)] - tF_[static_cast<size_t>(i - 1)]) /
                                  (tx_[static_cast<size_t>(i)] - tx_[static_cast<size_t>(i - 1)])
                            : std::numeric_limits<double>::infinity();
        double dr = (i + 1 < n) ? (tF_[static_cast<size_t>(i + 1)] - tF_[static_cast<size_t>(i)]) /
                                      (tx_[static_cast<size_t>(i + 1)] - tx_[static_cast<size_t>(i)])
                                : std::numeric_limits<double>::infinity();
        double cap = 3.0 * std::min(dl, dr);
        if (slope_[static_cast<size_t>(i)] > cap) slope_[static_cast<size_t>(i)] = cap;
        if (slope_[static_cast<size_t>(i)] < 0.0) slope_[static_cast<size_t>(i)] = 0.0;
    }
}

double XiSizeBiased::cdf(double x) const {
    if (!(x > 0.0)) return 0.0;
    if (x <= tx_.front()) return 0.0;
    if (x >= tx_.back()) return 1.0;
    auto it = std::upper_bound(tx_.begin(), tx_.end(), x);
    size_t i = static_cast<size_t>(it - tx_.begin()) - 1;
    return hermite(x, tx_[i], tx_[i + 1], tF_[i], tF_[i + 1], slope_[i], slope_[i + 1]);
}

double XiSizeBiased::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("XiSizeBiased::quantile: p must lie in (0,1)");
    if (p <= tF_.front()) return tx_.front();
    if (p >= tF_.back()) return tx_.back();
    auto it = std::upper_bound(tF_.begin(), tF_.end(), p);
    size_t i = static_cast<size_t>(it - tF_.begin()) - 1;
    double a = tx_[i], b = tx_[i + 1];
    // Bisect on the abscissa, not on |F - p|: an F-space stop would let the
    // returned x drift by tol/pdf, which is unbounded in the flat tails.
    for (int iter = 0; iter < 80; ++iter) {
        double mid = 0.5 * (a + b);
        double F = hermite(mid, tx_[i], tx_[i + 1], tF_[i], tF_[i + 1], slope_[i], slope_[i + 1]);
        (F < p ? a : b) = mid;
        if (b - a < 1e-14 * (1.0 + std::abs(a))) break;
    }
    return 0.5 * (a + b);
}

Complex XiSizeBiased::moment(Complex s) const {
    // E(X^s) = norm * int x^{s-1} v_k(x) dx: exactly a Mellin evaluation.
    QuadratureSpec qs;
    qs.tol = quad_tol_;
    return norm_ * mellin_transform([this](double x) { return vk(x); }, s, qs);
}

double XiSizeBiased::moment(double s) const { return moment(Complex(s, 0.0)).real(); }

double XiSizeBiased::mean() const { return moment(1.0); }

double XiSizeBiased::variance() const {
    double m1 = mean();
    return moment(2.0) - m1 * m1;
}

double XiSizeBiased::sample(SamplerState& state) const {
    return quantile(state.uniform());
}

std::vector<double> XiSizeBiased::sample(std::size_t n, SamplerState& state) const {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample(state));
    return out;
}

double XiSizeBiased::size_bias_gap(const std::function<double(double)>& f) const {
    QuadratureSpec qs;
    qs.tol = quad_tol_;
    double lhs = norm_ * integrate_half_line([this, &f](double x) { return f(x) * vk(x); }, qs);
    double rhs = norm_ * integrate_half_line([this, &f](double x) { return f(1.0 / x) * vk(x) / x; }, qs);
    return std::abs(lhs - rhs);
}

} // namespace xisb
