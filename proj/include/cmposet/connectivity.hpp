#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmposet/homology.hpp"
#include "cmposet/pi1.hpp"

namespace cmposet {

enum class VerdictStatus { verified, refuted, inconclusive };
enum class VerdictBasis { homology_only, homology_pi1 };

const char* to_string(VerdictStatus s);
const char* to_string(VerdictBasis b);

/// Homological certificate for "n-connected" / "n-spherical" claims. A
/// verified verdict with basis homology_pi1 additionally has a certified
/// trivial fundamental group.
struct ConnectivityVerdict {
    int level = 0;
    VerdictBasis basis = VerdictBasis::homology_only;
    VerdictStatus status = VerdictStatus::inconclusive;
    std::string reason;
    std::optional<HomologyProfile> homology;
    std::optional<Pi1Result> pi1;

    bool verified() const { return status == VerdictStatus::verified; }
    bool refuted() const { return status == VerdictStatus::refuted; }
};

struct CheckOptions {
    std::size_t budget = default_chain_budget;
    unsigned workers = 1;
    bool probe_pi1 = true;
    Pi1Limits pi1;
};

/// X is homologically n-connected: reduced homology vanishes in degrees <= n.
/// For n >= 1 the π₁ probe runs; a nontrivial answer refutes.
ConnectivityVerdict homology_connected(const FinitePoset& p, int n, const CheckOptions& opt = {});

/// X is n-spherical: dimension n and (n-1)-connected. The empty poset is
/// (-1)-spherical.
ConnectivityVerdict homology_spherical(const FinitePoset& p, int n, const CheckOptions& opt = {});

/// One row of a Cohen-Macaulay report: which subposet was tested and at
/// which dimension.
struct LinkCheck {
    enum class Kind { whole, below, above, interval };
    Kind kind = Kind::whole;
    Index x = -1;
    Index y = -1;
    int expected_dimension = 0;
    ConnectivityVerdict verdict;
};

const char* to_string(LinkCheck::Kind k);

struct CohenMacaulayReport {
    int dimension = 0;
    std::vector<LinkCheck> checks;
    VerdictStatus status = VerdictStatus::inconclusive;

    std::vector<const LinkCheck*> failures() const;
    std::size_t count(VerdictStatus s) const;
};

/// Tests sphericity of P at n, of X_{<x} at dim X_{<=x} - 1, of X_{>x} at
/// n - 1 - dim X_{<=x} and of every open interval (x,y) at
/// dim X_{<=y} - dim X_{<=x} - 2. Link checks run on `opt.workers` threads.
CohenMacaulayReport cohen_macaulay_check(const FinitePoset& p, int n, const CheckOptions& opt = {});

/// f is n-connected: H_k(M(f), X) = 0 for k <= n. For n >= 1 the π₁ of the
/// mapping cone is probed as a necessary condition; it can refute but never
/// upgrades the basis.
ConnectivityVerdict map_connectivity(const PosetMap& f, int n, const CheckOptions& opt = {});

/// Combines verdicts: refuted wins, then inconclusive.
VerdictStatus combine(VerdictStatus a, VerdictStatus b);

}  // namespace cmposet
