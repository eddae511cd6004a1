#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmposet/report.hpp"

namespace cmposet {

/// um, dec, maazen, nerve, trees, stability, core-props.
const std::vector<std::string>& suite_names();

/// Runs one claim set. Claims are built and checked one after another;
/// parallelism stays inside the individual checks. Throws
/// std::invalid_argument for an unknown suite, an invalid config, or a ring
/// the suite cannot enumerate.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

/// |Sp(2g, F_q)| / (|Sp(2k, F_q)| |Sp(2g-2k, F_q)|): the number of
/// unimodular subspaces of genus k in F_q^{2g}.
std::uint64_t unimodular_subspace_count(std::int64_t q, int g, int k);

/// A random poset on `n` elements: each pair i < j related with probability
/// `density` before closure. Labels p0, p1, ...
FinitePoset random_poset(std::uint64_t& state, int n, double density);

/// A random order-preserving map into `target`; nullopt when none was found
/// after a few attempts.
std::optional<std::vector<Index>> random_monotone_map(std::uint64_t& state, const FinitePoset& source,
                                                      const FinitePoset& target);

/// splitmix64 step; the suites use it so reports do not depend on the
/// standard library's distributions.
std::uint64_t next_random(std::uint64_t& state);

}  // namespace cmposet
