#include "cmposet/connectivity.hpp"

#include <string>

#include "cmposet/parallel.hpp"
#include "cmposet/poset_ops.hpp"

namespace cmposet {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::verified: return "verified";
        case VerdictStatus::refuted: return "refuted";
        case VerdictStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

const char* to_string(VerdictBasis b) { return b == VerdictBasis::homology_pi1 ? "homology+pi1" : "homology-only"; }

const char* to_string(LinkCheck::Kind k) {
    switch (k) {
        case LinkCheck::Kind::whole: return "whole";
        case LinkCheck::Kind::below: return "below";
        case LinkCheck::Kind::above: return "above";
        case LinkCheck::Kind::interval: return "interval";
    }
    return "whole";
}

VerdictStatus combine(VerdictStatus a, VerdictStatus b) {
    if (a == VerdictStatus::refuted || b == VerdictStatus::refuted) return VerdictStatus::refuted;
    if (a == VerdictStatus::inconclusive || b == VerdictStatus::inconclusive) return VerdictStatus::inconclusive;
    return VerdictStatus::verified;
}

namespace {

// π₁ step shared by absolute checks; `v` is already homologically verified.
void upgrade_with_pi1(const FinitePoset& p, ConnectivityVerdict& v, const CheckOptions& opt) {
    if (!opt.probe_pi1) return;
    auto r = pi1_probe(p, opt.budget, opt.pi1);
    v.pi1 = r;
    if (r.status == Pi1Status::trivial) {
        v.basis = VerdictBasis::homology_pi1;
    } else if (r.status == Pi1Status::nontrivial) {
        v.status = VerdictStatus::refuted;
        v.reason = "fundamental group is nontrivial (" + r.detail + ")";
    } else {
        v.reason += "; pi1 undecided (" + r.detail + ")";
    }
}

}  // namespace

ConnectivityVerdict homology_connected(const FinitePoset& p, int n, const CheckOptions& opt) {
    ConnectivityVerdict v;
    v.level = n;
    if (n <= -2) {
        v.status = VerdictStatus::verified;
        v.reason = "every space is (-2)-connected";
        return v;
    }
    try {
        v.homology = reduced_homology(p, n, opt.budget);
    } catch (const BudgetExceeded& e) {
        v.reason = e.what();
        return v;
    }
    for (int k = -1; k <= n; ++k) {
        if (!v.homology->zero_at(k)) {
            v.status = VerdictStatus::refuted;
            v.reason = "reduced homology is nonzero in degree " + std::to_string(k);
            return v;
        }
    }
    v.status = VerdictStatus::verified;
    v.reason = "reduced homology vanishes through degree " + std::to_string(n);
    if (n >= 1) {
        try {
            upgrade_with_pi1(p, v, opt);
        } catch (const BudgetExceeded& e) {
            v.reason += std::string("; pi1 skipped (") + e.what() + ")";
        }
    }
    return v;
}

ConnectivityVerdict homology_spherical(const FinitePoset& p, int n, const CheckOptions& opt) {
    const int dim = p.dimension();
    if (dim != n) {
        ConnectivityVerdict v;
        v.level = n;
        v.status = VerdictStatus::refuted;
        v.reason = "dimension is " + std::to_string(dim) + ", expected " + std::to_string(n);
        return v;
    }
    auto v = homology_connected(p, n - 1, opt);
    v.level = n;
    return v;
}

std::vector<const LinkCheck*> CohenMacaulayReport::failures() const {
    std::vector<const LinkCheck*> out;
    for (const auto& c : checks)
        if (c.verdict.status != VerdictStatus::verified) out.push_back(&c);
    return out;
}

std::size_t CohenMacaulayReport::count(VerdictStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.verdict.status == s) ++n;
    return n;
}

CohenMacaulayReport cohen_macaulay_check(const FinitePoset& p, int n, const CheckOptions& opt) {
    CohenMacaulayReport report;
    report.dimension = n;
    const auto h = p.standard_height();
    auto& checks = report.checks;
    checks.push_back({LinkCheck::Kind::whole, -1, -1, n, {}});
    for (Index x = 0; x < p.size(); ++x) {
        const int hx = h[static_cast<std::size_t>(x)];
        checks.push_back({LinkCheck::Kind::below, x, -1, hx - 1, {}});
        checks.push_back({LinkCheck::Kind::above, x, -1, n - 1 - hx, {}});
    }
    for (Index x = 0; x < p.size(); ++x)
        p.for_each_above(x, [&](Index y) {
            checks.push_back({LinkCheck::Kind::interval, x, y,
                              h[static_cast<std::size_t>(y)] - h[static_cast<std::size_t>(x)] - 2, {}});
        });

    CheckOptions inner = opt;
    inner.workers = 1;
    parallel_for(checks.size(), opt.workers, [&](std::size_t i) {
        auto& c = checks[i];
        switch (c.kind) {
            case LinkCheck::Kind::whole: c.verdict = homology_spherical(p, c.expected_dimension, inner); break;
            case LinkCheck::Kind::below: c.verdict = homology_spherical(below(p, c.x), c.expected_dimension, inner); break;
            case LinkCheck::Kind::above: c.verdict = homology_spherical(above(p, c.x), c.expected_dimension, inner); break;
            case LinkCheck::Kind::interval:
                c.verdict = homology_spherical(open_interval(p, c.x, c.y), c.expected_dimension, inner);
                break;
        }
    });
    report.status = VerdictStatus::verified;
    for (const auto& c : checks) report.status = combine(report.status, c.verdict.status);
    return report;
}

ConnectivityVerdict map_connectivity(const PosetMap& f, int n, const CheckOptions& opt) {
    ConnectivityVerdict v;
    v.level = n;
    if (n <= -1) {
        v.status = VerdictStatus::verified;
        v.reason = "every pair is (-1)-connected";
        return v;
    }
    const auto cyl = mapping_cylinder(f, CylinderMode::full);
    std::vector<bool> source(static_cast<std::size_t>(cyl.poset.size()), false);
    for (Index i = 0; i < cyl.source_count; ++i) source[static_cast<std::size_t>(i)] = true;
    try {
        v.homology = relative_homology(cyl.poset, source, n, opt.budget);
    } catch (const BudgetExceeded& e) {
        v.reason = e.what();
        return v;
    }
    for (int k = 0; k <= n; ++k) {
        if (!v.homology->zero_at(k)) {
            v.status = VerdictStatus::refuted;
            v.reason = "relative homology of (M(f), X) is nonzero in degree " + std::to_string(k);
            return v;
        }
    }
    v.status = VerdictStatus::verified;
    v.reason = "relative homology of (M(f), X) vanishes through degree " + std::to_string(n);
    if (n >= 1 && opt.probe_pi1 && !f.source().empty()) {
        try {
            const auto cone = mapping_cylinder(f, CylinderMode::cone);
            auto r = pi1_probe(cone.poset, opt.budget, opt.pi1);
            v.pi1 = r;
            if (r.status == Pi1Status::nontrivial) {
                v.status = VerdictStatus::refuted;
                v.reason = "mapping cone has nontrivial fundamental group (" + r.detail + ")";
            }
        } catch (const BudgetExceeded& e) {
            v.reason += std::string("; pi1 of the mapping cone skipped (") + e.what() + ")";
        }
    }
    return v;
}

}  // namespace cmposet
