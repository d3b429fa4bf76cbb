#include <cmath>
#include <set>
#include <string>

#include "doctest.h"
#include "xisb/theorems.hpp"

namespace {

const xisb::ClaimLedger& full_ledger() {
    static const xisb::ClaimLedger ledger = [] {
        xisb::ClaimRunner runner;
        return runner.run_all();
    }();
    return ledger;
}

} // namespace

TEST_CASE("the registry drives a full, ordered, well-formed ledger") {
    const xisb::ClaimLedger& ledger = full_ledger();
    const std::vector<std::string>& ids = xisb::claim_ids();
    REQUIRE(ledger.entries.size() == ids.size());
    CHECK(ids.size() >= 14);
    for (size_t i = 0; i < ids.size(); ++i) {
        const xisb::ClaimEntry& e = ledger.entries[i];
        CHECK(e.claim_id == ids[i]);
        CHECK(!e.location.empty());
        CHECK(!e.measured.empty());
        CHECK(!e.reference.empty());
        CHECK(!e.note.empty());
    }
}

TEST_CASE("verified entries actually satisfy their own tolerance") {
    // Claims with one-sided or ratio-based verdicts judge themselves.
    const std::set<std::string> custom = {"dominance-ordering-k2", "dominance-ordering-k3",
                                          "cdf-transform-identity", "lln-mean-convergence"};
    for (const xisb::ClaimEntry& e : full_ledger().entries) {
        if (custom.count(e.claim_id)) continue;
        REQUIRE(e.measured.size() == e.reference.size());
        bool all_ok = true;
        for (size_t i = 0; i < e.measured.size(); ++i)
            all_ok = all_ok && xisb::agrees(e.measured[i], e.reference[i], e.tolerance);
        CHECK((e.verdict == xisb::Verdict::verified) == all_ok);
    }
}

TEST_CASE("the expected split between confirmations and findings") {
    const std::set<std::string> expected_discrepant = {
        "cdf-derivative-form",   "v2-closed-series",      "density-normalization",
        "moment-formula",        "variance-constant",     "dominance-ordering-k2",
        "dominance-ordering-k3", "bessel-integral-constant"};
    for (const xisb::ClaimEntry& e : full_ledger().entries) {
        bool should_flag = expected_discrepant.count(e.claim_id) > 0;
        CHECK_MESSAGE((e.verdict == xisb::Verdict::discrepancy) == should_flag,
                      e.claim_id.c_str());
    }
}

TEST_CASE("rerunning the suite reproduces the ledger byte for byte") {
    xisb::ClaimRunner a, b;
    std::string ja = a.run_all().to_json();
    std::string jb = b.run_all().to_json();
    CHECK(ja == jb);
    CHECK(ja.find("\"entries\"") != std::string::npos);
}

TEST_CASE("single-claim selection and id validation") {
    xisb::ClaimRunner runner;
    xisb::ClaimLedger one = runner.run({"xi-normalization"});
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries[0].claim_id == "xi-normalization");
    CHECK(one.find("xi-normalization") != nullptr);
    CHECK(one.find("mean-value") == nullptr);
    CHECK_THROWS_AS((void)runner.run({"no-such-claim"}), std::invalid_argument);
}

TEST_CASE("the text rendering carries ids and verdicts") {
    std::string text = full_ledger().to_text();
    CHECK(text.find("mean-value") != std::string::npos);
    CHECK(text.find("verified") != std::string::npos);
    CHECK(text.find("discrepancy") != std::string::npos);
    CHECK(text.find("dominance-ordering-k2") != std::string::npos);
}

TEST_CASE("the dominance finding records where the ordering breaks") {
    const xisb::ClaimEntry* e = full_ledger().find("dominance-ordering-k2");
    REQUIRE(e != nullptr);
    CHECK(e->verdict == xisb::Verdict::discrepancy);
    // the margin went negative by a macroscopic amount, not a rounding hair
    CHECK(e->measured[0] < -1e-3);
    CHECK(e->note.find("x =") != std::string::npos);
}

TEST_CASE("the moment finding names the convention that fits") {
    const xisb::ClaimEntry* e = full_ledger().find("moment-formula");
    REQUIRE(e != nullptr);
    CHECK(e->verdict == xisb::Verdict::discrepancy);
    CHECK(e->note.find("2 xi(s)") != std::string::npos);
}

TEST_CASE("the transform identity holds with ratio one") {
    const xisb::ClaimEntry* e = full_ledger().find("cdf-transform-identity");
    REQUIRE(e != nullptr);
    CHECK(e->verdict == xisb::Verdict::verified);
    REQUIRE(e->measured.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(e->measured[i] / e->reference[i] - 1.0) < 1e-6);
    }
}

TEST_CASE("the law of large numbers check converges at the root-n rate") {
    const xisb::ClaimEntry* e = full_ledger().find("lln-mean-convergence");
    REQUIRE(e != nullptr);
    CHECK(e->verdict == xisb::Verdict::verified);
    CHECK(e->measured[0] >= 95.0);
    CHECK(e->measured[1] >= 5.0);
    CHECK(e->measured[1] <= 20.0);
}
