#include "xisb/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace xisb {

namespace {

constexpr double pi = 3.14159265358979323846;

using Json = nlohmann::ordered_json;

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = lo * std::exp(step * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

Verdict verdict_all(const std::vector<double>& measured, const std::vector<double>& reference,
                    double tol) {
    for (size_t i = 0; i < measured.size(); ++i)
        if (!agrees(measured[i], reference[i], tol)) return Verdict::discrepancy;
    return Verdict::verified;
}

// Registry: canonical order of every claim. run() walks this list, so
// ledgers come out in a fixed order regardless of the selection order.
struct ClaimInfo {
    const char* id;
    const char* location;
};

const ClaimInfo registry[] = {
    {"mellin-pair", "definitions"},
    {"xi-normalization", "definitions"},
    {"theta-reflection", "definitions"},
    {"cdf-series-form", "definitions"},
    {"cdf-derivative-form", "definitions"},
    {"v2-closed-series", "definitions"},
    {"vk-reflection-k1", "theorem-density"},
    {"vk-reflection-k2", "theorem-density"},
    {"vk-reflection-k3", "theorem-density"},
    {"density-normalization", "theorem-density"},
    {"mean-value", "theorem-density"},
    {"moment-formula", "theorem-density"},
    {"moment-symmetry", "theorem-density"},
    {"size-bias-identity", "theorem-density"},
    {"variance-constant", "theorem-density"},
    {"dominance-ordering-k2", "theorem-ordering"},
    {"dominance-ordering-k3", "theorem-ordering"},
    {"bessel-integral-constant", "identity-bessel"},
    {"bessel-sum-identity", "identity-bessel"},
    {"cdf-transform-identity", "identity-transform"},
    {"lln-mean-convergence", "theorem-lln"},
};

std::string location_of(const std::string& id) {
    for (const ClaimInfo& info : registry)
        if (id == info.id) return info.location;
    throw std::invalid_argument("unknown claim id: " + id);
}

// (alpha/beta)^s int_0^inf exp(-beta^2 y^2 - alpha^2/y^2) y^{-2s-1} dy.
double bessel_integral_quadrature(double s, double alpha, double beta) {
    QuadratureSpec qs;
    qs.tol = 1e-13;
    double val = integrate_half_line(
        [=](double y) {
            double e = -beta * beta * y * y - alpha * alpha / (y * y);
            if (e < -745.0) return 0.0;
            return std::exp(e) * std::pow(y, -2.0 * s - 1.0);
        },
        qs);
    return std::pow(alpha / beta, s) * val;
}

// x sum_n c(n) n K_1(2 x n sqrt(pi)) with c = 1 or d_2.
double k1_sum(double x, const DivisorTable* d2) {
    double acc = 0.0;
    for (int n = 1; n <= 4000; ++n) {
        double arg = 2.0 * x * n * std::sqrt(pi);
        if (arg > 700.0) break;
        double c = (d2 != nullptr) ? static_cast<double>((*d2)(n)) : 1.0;
        double term = c * n * bessel_k(1, arg);
        acc += term;
        if (term < 1e-18 * (1.0 + acc) && n > 4) break;
    }
    return x * acc;
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::discrepancy: return "discrepancy";
        default: return "informational";
    }
}

const ClaimEntry* ClaimLedger::find(const std::string& claim_id) const {
    for (const ClaimEntry& e : entries)
        if (e.claim_id == claim_id) return &e;
    return nullptr;
}

std::string ClaimLedger::to_json() const {
    Json root;
    root["entries"] = Json::array();
    for (const ClaimEntry& e : entries) {
        Json j;
        j["claim_id"] = e.claim_id;
        j["location"] = e.location;
        j["measured"] = e.measured;
        j["reference"] = e.reference;
        j["tolerance"] = e.tolerance;
        j["verdict"] = to_string(e.verdict);
        j["note"] = e.note;
        root["entries"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

std::string ClaimLedger::to_text() const {
    std::ostringstream out;
    char buf[64];
    for (const ClaimEntry& e : entries) {
        out << e.claim_id << " [" << e.location << "] " << to_string(e.verdict) << "\n";
        out << "  measured: ";
        for (double m : e.measured) {
            std::snprintf(buf, sizeof buf, "%.12g ", m);
            out << buf;
        }
        out << "\n  reference:";
        for (double r : e.reference) {
            std::snprintf(buf, sizeof buf, " %.12g", r);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "%.3g", e.tolerance);
        out << "\n  tolerance: " << buf << "\n";
        if (!e.note.empty()) out << "  note: " << e.note << "\n";
    }
    return out.str();
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const ClaimInfo& info : registry) v.emplace_back(info.id);
        return v;
    }();
    return ids;
}

ClaimRunner::ClaimRunner(const VerifyConfig& cfg) : cfg_(cfg) {}

const DivisorTable& ClaimRunner::d2() {
    if (!d2_) d2_ = DivisorTable::build(2, 256);
    return *d2_;
}

const XiSizeBiased& ClaimRunner::dist(int k) {
    DistributionOptions opt;
    opt.quad_tol = cfg_.quad_tol;
    if (k == 1) {
        if (!x1_) x1_ = XiSizeBiased::build(1, opt);
        return *x1_;
    }
    if (k == 2) {
        if (!x2_) x2_ = XiSizeBiased::build(2, opt);
        return *x2_;
    }
    if (k == 3) {
        if (!x3_) x3_ = XiSizeBiased::build(3, opt);
        return *x3_;
    }
    throw std::invalid_argument("ClaimRunner: distributions are built for k in {1,2,3}");
}

ClaimEntry ClaimRunner::check_mellin_pair() {
    ClaimEntry e;
    e.claim_id = "mellin-pair";
    e.location = location_of(e.claim_id);
    QuadratureSpec qs;
    qs.tol = cfg_.quad_tol;
    for (double s : {2.0, 3.0}) {
        double m = mellin_transform([](double x) { return theta(x); }, Complex(s, 0.0), qs).real();
        e.measured.push_back(m);
        e.reference.push_back(xi(Complex(s, 0.0)).real());
    }
    e.tolerance = 1e-9;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "transform of the defining series equals the completed zeta itself; "
             "the doubled value would be off by the measured factor 2";
    return e;
}

ClaimEntry ClaimRunner::check_xi_normalization() {
    ClaimEntry e;
    e.claim_id = "xi-normalization";
    e.location = location_of(e.claim_id);
    e.measured = {2.0 * xi(Complex(0.0, 0.0)).real(), 2.0 * xi(Complex(1.0, 0.0)).real(),
                  xi(Complex(2.0, 0.0)).real()};
    e.reference = {1.0, 1.0, pi / 6.0};
    e.tolerance = 1e-12;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "values at 0, 1, and 2";
    return e;
}

ClaimEntry ClaimRunner::check_theta_reflection() {
    ClaimEntry e;
    e.claim_id = "theta-reflection";
    e.location = location_of(e.claim_id);
    double worst = 0.0;
    for (double x : log_grid(0.2, 5.0, cfg_.fe_grid_points)) {
        // Raw series on both sides; the production evaluator reflects
        // internally and would make this circular.
        double gap = rel_gap(x * theta_series(x), theta_series(1.0 / x));
        worst = std::max(worst, gap);
    }
    e.measured = {worst};
    e.reference = {0.0};
    e.tolerance = 1e-10;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "largest gap of x*theta(x) vs theta(1/x) over 25 log-spaced points in [0.2, 5], "
             "raw series both sides";
    return e;
}

ClaimEntry ClaimRunner::check_functional_equation(int k) {
    ClaimEntry e;
    e.claim_id = "vk-reflection-k" + std::to_string(k);
    e.location = location_of(e.claim_id);
    double tol = (k == 1) ? 1e-10 : (k == 2 ? 1e-8 : 1e-5);
    double worst = 0.0;
    if (k == 3) {
        VkEval vk(3);
        for (double x : log_grid(0.2, 5.0, cfg_.fe_grid_points))
            worst = std::max(worst, rel_gap(x * vk(x), vk(1.0 / x)));
    } else {
        for (double x : log_grid(0.2, 5.0, cfg_.fe_grid_points)) {
            double lhs = (k == 1) ? x * v1_series(x) : x * v2_series(x, d2());
            double rhs = (k == 1) ? v1_series(1.0 / x) : v2_series(1.0 / x, d2());
            worst = std::max(worst, rel_gap(lhs, rhs));
        }
    }
    e.measured = {worst};
    e.reference = {0.0};
    e.tolerance = tol;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = (k == 3) ? "contour route, no internal reflection"
                      : "raw series both sides, no internal reflection";
    return e;
}

ClaimEntry ClaimRunner::check_cdf_series() {
    ClaimEntry e;
    e.claim_id = "cdf-series-form";
    e.location = location_of(e.claim_id);
    const XiSizeBiased& d = dist(1);
    double worst = 0.0;
    for (double x : log_grid(0.3, 3.0, 10))
        worst = std::max(worst, rel_gap(cdf_k1(x), d.cdf_quadrature(x)));
    e.measured = {cdf_k1(1.0), worst};
    e.reference = {d.cdf_quadrature(1.0), 0.0};
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "closed CDF series vs cumulative quadrature of the normalized density, "
             "10 points in [0.3, 3]";
    return e;
}

ClaimEntry ClaimRunner::check_cdf_derivative_form() {
    ClaimEntry e;
    e.claim_id = "cdf-derivative-form";
    e.location = location_of(e.claim_id);
    double worst_kernel = 0.0;
    for (double x : {0.8, 1.5, 3.0}) {
        // As stated: CDF(x) = -x^{-2} theta'(1/x) with theta the defining series.
        e.measured.push_back(-theta_prime(1.0 / x) / (x * x));
        e.reference.push_back(cdf_k1(x));
        // The same relation with the Gaussian kernel w_1 in place of theta.
        double kernel = -w1_prime(1.0 / x) / (x * x);
        worst_kernel = std::max(worst_kernel, rel_gap(kernel, cdf_k1(x)));
    }
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "as stated the relation fails (it is negative at x = 1.5); with the kernel "
                  "2*sum exp(-pi n^2 x^2) it is an exact identity (max gap %.2e)",
                  worst_kernel);
    e.note = buf;
    return e;
}

ClaimEntry ClaimRunner::check_v2_closed_series() {
    ClaimEntry e;
    e.claim_id = "v2-closed-series";
    e.location = location_of(e.claim_id);
    for (double x : {0.5, 1.0, 2.0}) {
        e.measured.push_back(v2_printed_series(x, d2()));
        e.reference.push_back(v2(x, d2()));
    }
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    double contour_gap = rel_gap(v_general(2, 1.0), v2(1.0, d2()));
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "stated series vs the operator route 4*sum d2(n)[(b^4+9b^2)K0(b)-6b^3K1(b)], "
                  "b = 2 pi n x; the operator route matches contour inversion to %.2e at x = 1",
                  contour_gap);
    e.note = buf;
    return e;
}

ClaimEntry ClaimRunner::check_density_normalization() {
    ClaimEntry e;
    e.claim_id = "density-normalization";
    e.location = location_of(e.claim_id);
    for (int k : {1, 2, 3}) {
        e.measured.push_back(dist(k).raw_mass());
        // The claimed density 2^{-k} v_k(x)/x integrates to 1 only if the raw
        // mass is 2^k.
        e.reference.push_back(std::pow(2.0, k));
    }
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "measured raw mass of x^{-1} v_k is 1 for every k: the density needs no 2^{-k} "
             "prefactor; with it the law would carry total mass 2^{-k}";
    return e;
}

ClaimEntry ClaimRunner::check_mean_value() {
    ClaimEntry e;
    e.claim_id = "mean-value";
    e.location = location_of(e.claim_id);
    for (int k : {1, 2, 3}) {
        e.measured.push_back(dist(k).mean());
        e.reference.push_back(1.0);
    }
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "unit mean for k = 1, 2, 3 by quadrature";
    return e;
}

ClaimEntry ClaimRunner::check_moment_formula() {
    ClaimEntry e;
    e.claim_id = "moment-formula";
    e.location = location_of(e.claim_id);
    double worst_doubled = 0.0;
    for (int k : {1, 2}) {
        for (double s : {2.0, 3.0}) {
            double m = dist(k).moment(s);
            double xis = xi(Complex(s, 0.0)).real();
            e.measured.push_back(m);
            e.reference.push_back(std::pow(xis, k)); // the stated xi(s)^k
            worst_doubled = std::max(worst_doubled, rel_gap(m, std::pow(2.0 * xis, k)));
        }
    }
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "measured moments equal (2 xi(s))^k, max gap %.2e; the stated xi(s)^k "
                  "is off by 2^k, consistent with the k = 1 introduction form",
                  worst_doubled);
    e.note = buf;
    return e;
}

ClaimEntry ClaimRunner::check_moment_symmetry() {
    ClaimEntry e;
    e.claim_id = "moment-symmetry";
    e.location = location_of(e.claim_id);
    for (int k : {1, 2}) {
        for (Complex s : {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(0.5, 2.0)}) {
            Complex a = dist(k).moment(s);
            Complex b = dist(k).moment(Complex(1.0, 0.0) - s);
            e.measured.push_back(std::abs(a - b));
            e.reference.push_back(0.0);
        }
    }
    e.tolerance = 1e-7;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "E(X^s) = E(X^{1-s}) at s = 2, 3, 0.5+2i for k = 1, 2";
    return e;
}

ClaimEntry ClaimRunner::check_size_bias_identity() {
    ClaimEntry e;
    e.claim_id = "size-bias-identity";
    e.location = location_of(e.claim_id);
    std::vector<std::function<double(double)>> fns = {
        [](double) { return 1.0; },
        [](double x) { return x; },
        [](double x) { return std::exp(-x); },
    };
    for (int k : {1, 2}) {
        for (const auto& f : fns) {
            e.measured.push_back(dist(k).size_bias_gap(f));
            e.reference.push_back(0.0);
        }
    }
    e.tolerance = 1e-7;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "|E(X f(X)) - E(f(1/X))| for f in {1, x, exp(-x)}, k = 1, 2";
    return e;
}

ClaimEntry ClaimRunner::check_variance_constant() {
    ClaimEntry e;
    e.claim_id = "variance-constant";
    e.location = location_of(e.claim_id);
    double zeta3 = zeta(Complex(3.0, 0.0)).real();
    double worst_alt = 0.0;
    double worst_consistency = 0.0;
    double worst_stated = 0.0;
    for (int k : {1, 2}) {
        double var = dist(k).variance();
        e.measured.push_back(var);
        e.reference.push_back(2.0 * std::pow(zeta3, k) - 1.0); // the stated constant
        worst_stated = std::max(worst_stated, std::abs(var - e.reference.back()));
        worst_alt = std::max(worst_alt, rel_gap(var, std::pow(pi / 3.0, k) - 1.0));
        worst_consistency =
            std::max(worst_consistency, std::abs(var - (dist(k).moment(2.0) - 1.0)));
    }
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "gap to the stated 2 zeta(3)^k - 1 reaches %.6g; measured variance equals "
                  "(pi/3)^k - 1 (max gap %.2e), i.e. E(X^2) - 1 with E(X^2) = (2 xi(2))^k; "
                  "internal consistency var = E(X^2) - mean^2 holds to %.2e",
                  worst_stated, worst_alt, worst_consistency);
    e.note = buf;
    return e;
}

ClaimEntry ClaimRunner::check_dominance(int k) {
    ClaimEntry e;
    e.claim_id = "dominance-ordering-k" + std::to_string(k);
    e.location = location_of(e.claim_id);
    if (k != 2 && k != 3) throw std::invalid_argument("check_dominance: k must be 2 or 3");
    const XiSizeBiased& upper = dist(k - 1);
    const XiSizeBiased& lower = dist(k);
    double slack = (k == 2) ? 1e-9 : 1e-5;
    double min_margin = std::numeric_limits<double>::infinity();
    double worst_x = 0.0;
    for (double x : log_grid(0.1, 10.0, cfg_.dominance_grid_points)) {
        // Claimed ordering: survival of the higher k never exceeds the lower.
        double margin = upper.survival(x) - lower.survival(x);
        if (margin < min_margin) {
            min_margin = margin;
            worst_x = x;
        }
    }
    e.measured = {min_margin};
    e.reference = {0.0};
    e.tolerance = slack;
    e.verdict = (min_margin >= -slack) ? Verdict::verified : Verdict::discrepancy;
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "smallest margin of the claimed survival ordering over 50 log points in "
                  "[0.1, 10]; worst at x = %.6g. Both laws have unit mean, so neither survival "
                  "can dominate the other everywhere unless they coincide",
                  worst_x);
    e.note = buf;
    return e;
}

ClaimEntry ClaimRunner::check_bessel_integral() {
    ClaimEntry e;
    e.claim_id = "bessel-integral-constant";
    e.location = location_of(e.claim_id);
    double r = 1.0 / std::sqrt(2.0);
    struct Probe {
        double s, alpha, beta;
    };
    // 2 alpha beta = 1, 2, and the transform-identity instance.
    std::vector<Probe> probes = {{0.0, r, r}, {1.0, r, r}, {1.0, 1.0, 1.0}, {1.0, std::sqrt(pi), 2.0}};
    double worst_single = 0.0;
    for (const Probe& p : probes) {
        double q = bessel_integral_quadrature(p.s, p.alpha, p.beta);
        double ks = bessel_k(static_cast<int>(p.s), 2.0 * p.alpha * p.beta);
        e.measured.push_back(q);
        e.reference.push_back(2.0 * ks); // the stated left side
        worst_single = std::max(worst_single, rel_gap(q, ks));
    }
    e.tolerance = 1e-9;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "the integral equals K_s(2 alpha beta) itself (max gap %.2e over 4 probes); "
                  "the stated factor 2 is not supported",
                  worst_single);
    e.note = buf;
    return e;
}

ClaimEntry ClaimRunner::check_bessel_sum_identity() {
    ClaimEntry e;
    e.claim_id = "bessel-sum-identity";
    e.location = location_of(e.claim_id);
    QuadratureSpec qs;
    qs.tol = 1e-13;
    for (double x : {0.5, 1.0, 2.0}) {
        double lhs = k1_sum(x, nullptr);
        double rhs = std::sqrt(pi) * integrate_half_line(
                                         [x](double y) {
                                             double g = x * y;
                                             if (g * g > 745.0) return 0.0;
                                             double q = pi / (y * y);
                                             double acc = 0.0;
                                             for (int n = 1; n <= 100000; ++n) {
                                                 double a = q * n * n;
                                                 if (a > 745.0) break;
                                                 double term = n * static_cast<double>(n) * std::exp(-a);
                                                 acc += term;
                                                 if (term < 1e-18 * (1.0 + acc) && n > y) break;
                                             }
                                             return std::exp(-g * g) * acc / (y * y * y);
                                         },
                                         qs);
        e.measured.push_back(lhs);
        e.reference.push_back(rhs);
    }
    e.tolerance = 1e-8;
    e.verdict = verdict_all(e.measured, e.reference, e.tolerance);
    e.note = "x sum n K1(2 x n sqrt(pi)) vs the Gaussian-weighted integral, x in {0.5, 1, 2}";
    return e;
}

ClaimEntry ClaimRunner::check_cdf_transform_identity() {
    ClaimEntry e;
    e.claim_id = "cdf-transform-identity";
    e.location = location_of(e.claim_id);
    QuadratureSpec qs;
    qs.tol = 1e-13;
    std::vector<double> ratios;
    for (double x : {0.5, 1.0, 2.0}) {
        double lhs = k1_sum(x, &d2());
        double rhs = integrate_half_line(
                         [x](double y) {
                             double F = cdf_k1(y);
                             if (F == 0.0) return 0.0;
                             double acc = 0.0;
                             for (int m = 1; m <= 100000; ++m) {
                                 double g = x * m * y;
                                 if (g * g > 745.0) break;
                                 acc += std::exp(-g * g);
                             }
                             return F * acc;
                         },
                         qs) /
                     (4.0 * std::sqrt(pi));
        e.measured.push_back(lhs);
        e.reference.push_back(rhs);
        if (rhs != 0.0) ratios.push_back(lhs / rhs);
    }
    // Pass if the sides agree; otherwise the finding is whether the ratio is
    // at least constant in x.
    double worst_ratio_dev = 0.0;
    for (double r : ratios) worst_ratio_dev = std::max(worst_ratio_dev, std::abs(r - 1.0));
    e.tolerance = 1e-6;
    e.verdict = (worst_ratio_dev <= 1e-6) ? Verdict::verified : Verdict::discrepancy;
    char buf[160];
    double spread = 0.0;
    for (double r : ratios) spread = std::max(spread, std::abs(r - ratios.front()));
    std::snprintf(buf, sizeof buf,
                  "side ratio deviates from 1 by at most %.2e; ratio spread across x is %.2e",
                  worst_ratio_dev, spread);
    e.note = buf;
    return e;
}

ClaimEntry ClaimRunner::check_lln() {
    ClaimEntry e;
    e.claim_id = "lln-mean-convergence";
    e.location = location_of(e.claim_id);
    const XiSizeBiased& d = dist(1);
    SamplerState root(cfg_.seed);

    auto trial_mean = [&](int n, std::uint64_t stream) {
        SamplerState s = root.split(stream);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += d.sample(s);
        return acc / n;
    };

    int within = 0;
    double dev_large = 0.0, dev_small = 0.0;
    for (int t = 0; t < cfg_.lln_trials; ++t) {
        double m_large = trial_mean(cfg_.lln_n, 2 * static_cast<std::uint64_t>(t));
        double m_small = trial_mean(cfg_.lln_n_small, 2 * static_cast<std::uint64_t>(t) + 1);
        if (std::abs(m_large - 1.0) <= 0.01) ++within;
        dev_large += std::abs(m_large - 1.0);
        dev_small += std::abs(m_small - 1.0);
    }
    dev_large /= cfg_.lln_trials;
    dev_small /= cfg_.lln_trials;
    double shrink = dev_small / dev_large;

    e.measured = {static_cast<double>(within), shrink};
    e.reference = {static_cast<double>(cfg_.lln_trials), 10.0};
    e.tolerance = 0.0;
    bool ok = within >= (cfg_.lln_trials * 95) / 100 && shrink >= 5.0 && shrink <= 20.0;
    e.verdict = ok ? Verdict::verified : Verdict::discrepancy;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%d of %d trials of size %d landed within 0.01 of the unit mean; mean absolute "
                  "deviation shrank by %.3g from n = %d to n = %d (root-n predicts ~10)",
                  within, cfg_.lln_trials, cfg_.lln_n, shrink, cfg_.lln_n_small, cfg_.lln_n);
    e.note = buf;
    return e;
}

ClaimLedger ClaimRunner::run(const std::vector<std::string>& ids) {
    for (const std::string& id : ids) location_of(id); // validate early
    auto wanted = [&ids](const char* id) {
        return std::find(ids.begin(), ids.end(), id) != ids.end();
    };
    ClaimLedger ledger;
    for (const ClaimInfo& info : registry) {
        if (!wanted(info.id)) continue;
        std::string id = info.id;
        if (id == "mellin-pair") ledger.entries.push_back(check_mellin_pair());
        else if (id == "xi-normalization") ledger.entries.push_back(check_xi_normalization());
        else if (id == "theta-reflection") ledger.entries.push_back(check_theta_reflection());
        else if (id == "cdf-series-form") ledger.entries.push_back(check_cdf_series());
        else if (id == "cdf-derivative-form") ledger.entries.push_back(check_cdf_derivative_form());
        else if (id == "v2-closed-series") ledger.entries.push_back(check_v2_closed_series());
        else if (id == "vk-reflection-k1") ledger.entries.push_back(check_functional_equation(1));
        else if (id == "vk-reflection-k2") ledger.entries.push_back(check_functional_equation(2));
        else if (id == "vk-reflection-k3") ledger.entries.push_back(check_functional_equation(3));
        else if (id == "density-normalization") ledger.entries.push_back(check_density_normalization());
        else if (id == "mean-value") ledger.entries.push_back(check_mean_value());
        else if (id == "moment-formula") ledger.entries.push_back(check_moment_formula());
        else if (id == "moment-symmetry") ledger.entries.push_back(check_moment_symmetry());
        else if (id == "size-bias-identity") ledger.entries.push_back(check_size_bias_identity());
        else if (id == "variance-constant") ledger.entries.push_back(check_variance_constant());
        else if (id == "dominance-ordering-k2") ledger.entries.push_back(check_dominance(2));
        else if (id == "dominance-ordering-k3") ledger.entries.push_back(check_dominance(3));
        else if (id == "bessel-integral-constant") ledger.entries.push_back(check_bessel_integral());
        else if (id == "bessel-sum-identity") ledger.entries.push_back(check_bessel_sum_identity());
        else if (id == "cdf-transform-identity") ledger.entries.push_back(check_cdf_transform_identity());
        else if (id == "lln-mean-convergence") ledger.entries.push_back(check_lln());
    }
    return ledger;
}

ClaimLedger ClaimRunner::run_all() { return run(claim_ids()); }

} // namespace xisb
