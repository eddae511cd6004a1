#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmposet/connectivity.hpp"
#include "cmposet/ring.hpp"

namespace cmposet {

struct SuiteConfig {
    ScalarRing ring = ScalarRing::prime_field(2);
    int genus = 2;
    std::size_t budget = default_chain_budget;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::string cache_dir;  ///< empty: no cache

    /// Throws std::invalid_argument for a zero budget or worker count or a
    /// negative genus.
    void validate() const;
};

struct ClaimRecord {
    std::string id;
    std::string anchor;  ///< the statement being checked, in words
    VerdictStatus verdict = VerdictStatus::inconclusive;
    VerdictBasis basis = VerdictBasis::homology_only;
    std::string detail;
    nlohmann::json counts = nlohmann::json::object();
    double seconds = 0;  ///< kept out of the main document
};

struct VerificationReport {
    std::string suite;
    SuiteConfig config;
    std::vector<ClaimRecord> claims;

    VerdictStatus overall() const;
    std::size_t count(VerdictStatus s) const;
    /// Deterministic given config, seed and version: no timings, no host data.
    nlohmann::json to_json() const;
    /// Per-claim wall-clock seconds, for the sidecar file.
    nlohmann::json timings_json() const;
};

/// 0 all verified, 1 any refuted, 2 otherwise.
int exit_code(VerdictStatus overall);

/// Writes <dir>/<suite>.json and <dir>/<suite>.timings.json; returns the
/// path of the first.
std::string write_report(const VerificationReport& r, const std::string& dir);

}  // namespace cmposet
