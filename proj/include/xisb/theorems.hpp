#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xisb/distribution.hpp"

namespace xisb {

enum class Verdict { verified, discrepancy, informational };

std::string to_string(Verdict v);

/// One measured claim: what was computed, what the source states, and whether
/// they agree under |measured - reference| <= tolerance * (1 + |reference|).
struct ClaimEntry {
    std::string claim_id;
    std::string location;
    std::vector<double> measured;
    std::vector<double> reference;
    double tolerance = 0.0;
    Verdict verdict = Verdict::informational;
    std::string note;
};

/// The full verification record. Ordering is canonical (registry order), so
/// serialized reruns with the same configuration are byte-identical.
struct ClaimLedger {
    std::vector<ClaimEntry> entries;

    const ClaimEntry* find(const std::string& claim_id) const;
    std::string to_json() const;
    std::string to_text() const;
};

/// Reproducibility knobs shared by every check.
struct VerifyConfig {
    std::uint64_t seed = 20260819;
    double quad_tol = 1e-12;
    int fe_grid_points = 25;        // functional-equation grid on [0.2, 5]
    int dominance_grid_points = 50; // survival-ordering grid on [0.1, 10]
    int lln_trials = 100;
    int lln_n = 10000;
    int lln_n_small = 100;
};

/// All registered claim ids in canonical order.
const std::vector<std::string>& claim_ids();

/// Runs the requested claims (every id must be registered) and returns the
/// ledger in canonical order. Heavy shared state (distributions, tables,
/// contours) is built once and reused.
class ClaimRunner {
public:
    explicit ClaimRunner(const VerifyConfig& cfg = {});

    ClaimLedger run(const std::vector<std::string>& ids);
    ClaimLedger run_all();

    /// Individual checks; each returns the entry it would add.
    ClaimEntry check_mellin_pair();
    ClaimEntry check_xi_normalization();
    ClaimEntry check_theta_reflection();
    ClaimEntry check_functional_equation(int k);
    ClaimEntry check_cdf_series();
    ClaimEntry check_cdf_derivative_form();
    ClaimEntry check_v2_closed_series();
    ClaimEntry check_density_normalization();
    ClaimEntry check_mean_value();
    ClaimEntry check_moment_formula();
    ClaimEntry check_moment_symmetry();
    ClaimEntry check_size_bias_identity();
    ClaimEntry check_variance_constant();
    ClaimEntry check_dominance(int k);
    ClaimEntry check_bessel_integral();
    ClaimEntry check_bessel_sum_identity();
    ClaimEntry check_cdf_transform_identity();
    ClaimEntry check_lln();

    const XiSizeBiased& dist(int k);

private:
    VerifyConfig cfg_;
    std::optional<DivisorTable> d2_;
    std::optional<XiSizeBiased> x1_, x2_, x3_;

    const DivisorTable& d2();
};

} // namespace xisb
