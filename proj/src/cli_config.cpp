#include "xisb/cli_config.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xisb {

namespace {

std::vector<std::string> split_colons(const std::string& text) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ':')) parts.push_back(piece);
    return parts;
}

double to_real(const std::string& s, const char* what) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: " + s);
    }
    if (pos != s.size()) throw std::invalid_argument(std::string(what) + ": trailing junk: " + s);
    return v;
}

} // namespace

void GridSpec::validate() const {
    if (!(min > 0.0)) throw std::invalid_argument("grid: min must be > 0");
    if (!(max > min)) throw std::invalid_argument("grid: max must exceed min");
    if (points < 2) throw std::invalid_argument("grid: need at least 2 points");
}

std::vector<double> GridSpec::knots() const {
    validate();
    std::vector<double> g(static_cast<size_t>(points));
    if (log_spaced) {
        double step = std::log(max / min) / (points - 1);
        for (int i = 0; i < points; ++i) g[static_cast<size_t>(i)] = min * std::exp(step * i);
    } else {
        double step = (max - min) / (points - 1);
        for (int i = 0; i < points; ++i) g[static_cast<size_t>(i)] = min + step * i;
    }
    g.front() = min;
    g.back() = max;
    return g;
}

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts = split_colons(text);
    if (parts.size() != 4)
        throw std::invalid_argument("grid: expected min:max:n:log|linear, got " + text);
    GridSpec g;
    g.min = to_real(parts[0], "grid min");
    g.max = to_real(parts[1], "grid max");
    double n = to_real(parts[2], "grid n");
    if (n != std::floor(n) || n < 2 || n > 1e7)
        throw std::invalid_argument("grid: point count out of range: " + parts[2]);
    g.points = static_cast<int>(n);
    if (parts[3] == "log") g.log_spaced = true;
    else if (parts[3] == "linear") g.log_spaced = false;
    else throw std::invalid_argument("grid: spacing must be log or linear, got " + parts[3]);
    g.validate();
    return g;
}

ContourSpec parse_contour(const std::string& text, ContourSpec base) {
    std::vector<std::string> parts = split_colons(text);
    if (parts.size() != 3)
        throw std::invalid_argument("contour: expected c:T:step, got " + text);
    base.c = to_real(parts[0], "contour c");
    base.half_height = to_real(parts[1], "contour T");
    base.step = to_real(parts[2], "contour step");
    base.validate();
    return base;
}

void RunConfig::validate() const {
    if (k < 1 || k > 8) throw std::invalid_argument("k must lie in [1, 8]");
    grid.validate();
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (tol && !(*tol > 0.0 && *tol < 1.0))
        throw std::invalid_argument("tol must lie in (0, 1)");
}

FunctionSet::FunctionSet(const RunConfig& cfg)
    : k_(cfg.k), budget_(cfg.budget), contour_tol_(cfg.contour ? cfg.contour->tol : 1e-10) {
    if (cfg.contour) vk_.emplace(cfg.k, *cfg.contour);
}

const std::vector<std::string>& FunctionSet::names() {
    static const std::vector<std::string> list = {"theta", "v1", "v2", "vk",  "xi",
                                                  "zeta",  "K0", "K1", "cdf1"};
    return list;
}

bool FunctionSet::known(const std::string& fn) {
    for (const std::string& name : names())
        if (name == fn) return true;
    return false;
}

const DivisorTable& FunctionSet::d2() {
    if (!d2_) d2_ = DivisorTable::build(2, 256);
    return *d2_;
}

const VkEval& FunctionSet::vk() {
    if (!vk_) vk_.emplace(k_);
    return *vk_;
}

void FunctionSet::charge() {
    ++used_;
    if (budget_ && used_ > *budget_)
        throw resource_error("evaluation budget exhausted (XISB_BUDGET)");
}

EvalResult FunctionSet::eval(const std::string& fn, double x) {
    charge();
    EvalResult r;
    if (fn == "theta") {
        r.value = theta(x);
    } else if (fn == "v1") {
        r.value = v1(x);
    } else if (fn == "v2") {
        r.value = v2(x, d2());
    } else if (fn == "vk") {
        if (k_ == 1) r.value = v1(x);
        else if (k_ == 2) r.value = v2(x, d2());
        else {
            // Contour truncation noise scales like x^{-c}; below 1 route
            // through the reflection so the estimate stays honest.
            if (!(x > 0.0)) throw std::domain_error("vk: x must be positive");
            r.value = (x >= 1.0) ? vk()(x) : vk()(1.0 / x) / x;
            r.err_estimate = contour_tol_ * (1.0 + std::abs(r.value));
            return r;
        }
    } else if (fn == "xi") {
        r.value = xi(Complex(x, 0.0)).real();
        r.err_estimate = 1e-12 * (1.0 + std::abs(r.value));
        return r;
    } else if (fn == "zeta") {
        r.value = zeta(Complex(x, 0.0)).real();
        r.err_estimate = 1e-12 * (1.0 + std::abs(r.value));
        return r;
    } else if (fn == "K0") {
        r.value = bessel_k(0, x);
    } else if (fn == "K1") {
        r.value = bessel_k(1, x);
    } else if (fn == "cdf1") {
        r.value = cdf_k1(x);
    } else {
        throw std::invalid_argument("unknown function: " + fn);
    }
    r.err_estimate = 1e-13 * (1.0 + std::abs(r.value));
    return r;
}

} // namespace xisb
