#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qstab/harness/ideal_system.hpp"

namespace qstab::harness {

struct CheckOptions {
    long samples = 500;
    std::uint64_t seed = 42;
    /// (A, B) pairs or J ideals drawn per sampled ideal.
    long pairs_per_ideal = 5;
    /// Draw only invertible ideals in flat_criterion.
    bool invertible_only = false;
};

/// Outcome of one claim check on one backend. failures equals the number
/// of witnesses; elapsed_ms is the only field that varies between runs.
struct TheoremReport {
    std::string claim_id;
    std::string backend;
    std::uint64_t seed = 0;
    long samples = 0;
    long failures = 0;
    long inconclusive = 0;
    bool vacuous = false;
    /// pass, fail, inconclusive, vacuous, n/a, evidence or subsumed.
    std::string status;
    std::vector<Json> witnesses;
    Json details = Json::object();
    double elapsed_ms = 0;

    void fail(Json witness) {
        ++failures;
        witnesses.push_back(std::move(witness));
    }
    bool ok() const { return failures == 0 && inconclusive == 0; }
    Json to_json() const;
};

/// Header line then one row per report.
std::string reports_to_csv(const std::vector<TheoremReport>& reports);

/// Per-check generator: the seed mixed with an FNV-1a hash of the claim id.
Rng check_rng(const std::string& claim_id, std::uint64_t seed);

}  // namespace qstab::harness
