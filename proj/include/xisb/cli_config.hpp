#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xisb/distribution.hpp"

namespace xisb {

/// Evaluation grid, parsed from "min:max:n:log" or "min:max:n:linear".
struct GridSpec {
    double min = 0.2;
    double max = 5.0;
    int points = 25;
    bool log_spaced = true;

    void validate() const;
    std::vector<double> knots() const;
};

GridSpec parse_grid(const std::string& text);

/// Contour override, parsed from "c:T:step". Fields not subject to override
/// keep the values of `base`.
ContourSpec parse_contour(const std::string& text, ContourSpec base);

/// Everything a single command run needs. The binary fills this from flags
/// and the environment, then hands it to the command implementations.
struct RunConfig {
    std::string command;   // eval | table | sample | verify
    int k = 1;
    GridSpec grid;
    std::uint64_t seed = 0;
    long long n = 1000;
    std::string format = "csv";
    std::string out_path;  // empty: stdout
    std::optional<ContourSpec> contour;
    std::optional<double> tol;
    std::optional<std::uint64_t> budget;  // from XISB_BUDGET

    void validate() const;
};

struct EvalResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

/// The scalar evaluation surface the eval and table commands expose.
/// Holds the shared divisor table and one contour cache per k, and charges
/// every evaluation against the optional budget.
class FunctionSet {
public:
    explicit FunctionSet(const RunConfig& cfg);

    static const std::vector<std::string>& names();
    static bool known(const std::string& fn);

    EvalResult eval(const std::string& fn, double x);

    std::uint64_t evaluations() const { return used_; }

private:
    void charge();

    int k_;
    std::optional<std::uint64_t> budget_;
    std::uint64_t used_ = 0;
    double contour_tol_;
    std::optional<DivisorTable> d2_;
    std::optional<VkEval> vk_;
    const DivisorTable& d2();
    const VkEval& vk();
};

} // namespace xisb
