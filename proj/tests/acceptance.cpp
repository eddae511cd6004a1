// Acceptance run: one PASS/FAIL line per criterion. Homology is exact, so
// every numeric comparison below is an equality; runtime limits are wall
// clock on the calling thread.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "cmposet/lattice_posets.hpp"
#include "cmposet/nerve.hpp"
#include "cmposet/partial_bases.hpp"
#include "cmposet/set_partitions.hpp"
#include "cmposet/stability.hpp"
#include "cmposet/suites.hpp"
#include "cmposet/utrees.hpp"

using namespace cmposet;

namespace {

const ScalarRing f2 = ScalarRing::prime_field(2);
const ScalarRing f3 = ScalarRing::prime_field(3);

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail.str("");
            pass = false;
            detail << what << "; ";
        } else if (pass) {
            detail << what << "; ";
        }
    }
};

CheckOptions homology_only() {
    CheckOptions o;
    o.probe_pi1 = false;
    return o;
}

std::string claim_status(const VerificationReport& r, const std::string& id, const ClaimRecord** out = nullptr) {
    for (const auto& c : r.claims)
        if (c.id == id) {
            if (out) *out = &c;
            return to_string(c.verdict);
        }
    return "missing";
}

bool all_verified(const VerificationReport& r) { return r.overall() == VerdictStatus::verified && !r.claims.empty(); }

void criterion1(Outcome& o) {
    const auto u = build_U(SymplecticModule::standard(f2, 2));
    o.require(u.poset.size() == 22, "|U| = " + std::to_string(u.poset.size()));
    const auto cm = cohen_macaulay_check(u.poset, 2);
    o.require(cm.status == VerdictStatus::verified && cm.failures().empty(),
              "CM checks verified " + std::to_string(cm.count(VerdictStatus::verified)) + "/" +
                  std::to_string(cm.checks.size()));
    const auto bottom = u.poset.minimal_elements().front();
    const auto top = u.poset.maximal_elements().front();
    const auto h = reduced_homology(open_interval(u.poset, bottom, top));
    o.require(h.betti_at(0) == 19, "interval reduced b0 = " + std::to_string(h.betti_at(0)));
}

void criterion2(Outcome& o) {
    const auto u = build_U(SymplecticModule::standard(f2, 3), 4);
    o.require(u.poset.size() == 674, "|U| = " + std::to_string(u.poset.size()));
    const auto interval = open_interval(u.poset, u.poset.minimal_elements().front(), u.poset.maximal_elements().front());
    o.require(homology_connected(interval, 0, homology_only()).verified(), "U_(0,L) homologically 0-connected");
    CheckOptions opt = homology_only();
    opt.workers = 4;
    const auto cm = cohen_macaulay_check(u.poset, 3, opt);
    o.require(cm.status == VerdictStatus::verified,
              "links spherical " + std::to_string(cm.count(VerdictStatus::verified)) + "/" + std::to_string(cm.checks.size()));
}

void criterion3(Outcome& o) {
    struct Case {
        int genus;
        int radical;
    };
    for (auto [g, r] : {Case{1, 0}, Case{2, 0}, Case{1, 1}, Case{2, 1}}) {
        const auto i = build_I(SymplecticModule::standard(f2, g, r));
        const auto cm = cohen_macaulay_check(i.poset, g - 1);
        o.require(cm.status == VerdictStatus::verified && i.poset.dimension() == g - 1,
                  "I(standard(" + std::to_string(g) + "," + std::to_string(r) + ")) CM of dim " + std::to_string(g - 1) +
                      " (" + std::to_string(i.poset.size()) + " elements)");
    }
}

void criterion4(Outcome& o) {
    for (int g : {2, 3}) {
        const auto l = SymplecticModule::standard(f2, g);
        const auto d = build_D(l, false);
        const auto cm = cohen_macaulay_check(d.poset, g - 1, homology_only());
        o.require(cm.status == VerdictStatus::verified, "D(F2^" + std::to_string(2 * g) + ") CM of dim " + std::to_string(g - 1));
    }
    const auto d2 = build_D(SymplecticModule::standard(f2, 2), true);
    const auto h2 = reduced_homology(d2.poset);
    o.require(d2.poset.size() == 10 && d2.poset.relation_count() == 0 && h2.betti_at(0) == 9,
              "D+(F2^4): 10-point antichain, b0 = " + std::to_string(h2.betti_at(0)));
    const auto d3 = build_D(SymplecticModule::standard(f2, 3), true);
    const auto h3 = reduced_homology(d3.poset);
    o.require(d3.poset.size() == 1456 && d3.poset.dimension() == 1 && h3.betti_at(0) == 0,
              "D+(F2^6): " + std::to_string(d3.poset.size()) + " elements, dim " + std::to_string(d3.poset.dimension()) +
                  ", b0 = " + std::to_string(h3.betti_at(0)));
}

void criterion5(Outcome& o) {
    for (int m = 2; m <= 5; ++m) {
        const auto p = partitions_poset(m);
        const auto v = homology_spherical(p.poset, m - 2);
        bool ok = v.verified();
        if (m >= 4) ok = ok && v.pi1 && v.pi1->status == Pi1Status::trivial;
        o.require(ok, "D+(" + std::to_string(m) + ") " + std::to_string(m - 2) + "-spherical" +
                          (m >= 4 ? ", pi1 trivial" : ""));
    }
}

void criterion6(Outcome& o) {
    SuiteConfig cfg;
    cfg.genus = 2;
    const auto r = run_suite("stability", cfg);
    const ClaimRecord* size = nullptr;
    const ClaimRecord* table = nullptr;
    const ClaimRecord* seqs = nullptr;
    claim_status(r, "HU.size.g2", &size);
    claim_status(r, "HU.corollary-op.g2", &table);
    claim_status(r, "partition-sequences.spherical", &seqs);
    o.require(size && size->verdict == VerdictStatus::verified && size->counts["elements"] == 840, "|HU_2(F2)| = 840");
    o.require(table && table->verdict == VerdictStatus::verified && table->counts["rows"] == 10,
              "dual fibre-link table verified on 10 rows with 2s + t <= g");
    o.require(seqs && seqs->verdict == VerdictStatus::verified && seqs->counts["posets"] == 22,
              "22 partition-sequence posets spherical");
}

// Drops the last coordinate of every vector and looks the result up in O(n-1).
bool bound_zero_matches(const ScalarRing& ring, int n) {
    OConstraint zero;
    zero.bound = 0;
    const auto big = build_O(ring, n, zero);
    const auto small = build_O(ring, n - 1);
    if (big.poset.size() != small.poset.size()) return false;
    std::map<std::string, Index> where;
    for (Index i = 0; i < small.poset.size(); ++i) where[sequence_text(ring, small.sequences[static_cast<std::size_t>(i)])] = i;
    std::vector<Index> image;
    for (const auto& s : big.sequences) {
        if (!s.col(n - 1).isZero()) return false;
        auto it = where.find(sequence_text(ring, s.leftCols(n - 1)));
        if (it == where.end()) return false;
        image.push_back(it->second);
    }
    return order_matches(small.poset, image, big.poset);
}

void criterion7(Outcome& o) {
    for (const auto& ring : {f2, f3})
        for (int n = 1; n <= 3; ++n) {
            const auto p = build_O(ring, n);
            const int d = n - 2;
            o.require(homology_connected(p.poset, d, homology_only()).verified(),
                      "O(" + std::to_string(n) + "," + ring.name() + ") " + std::to_string(d) + "-connected");
        }
    for (const auto& ring : {f2, f3})
        for (int n = 2; n <= 3; ++n)
            o.require(bound_zero_matches(ring, n), "O(" + std::to_string(n) + ",0) = O(" + std::to_string(n - 1) + ") over " + ring.name());
    SuiteConfig cfg;
    const auto r = run_suite("maazen", cfg);
    const ClaimRecord* rho = nullptr;
    claim_status(r, "rho.random", &rho);
    o.require(rho && rho->verdict == VerdictStatus::verified && rho->counts["instances"] == 1000,
              "rho on 1000 integer instances");
}

void criterion8(Outcome& o) {
    SuiteConfig cfg;
    const auto r = run_suite("core-props", cfg);
    for (const char* id : {"core.thick-join", "core.cylinder", "core.cylinder-link", "core.subdivision"})
        o.require(claim_status(r, id) == std::string("verified"), std::string(id) + " on 100 samples");
}

void criterion9(Outcome& o) {
    const auto l = SymplecticModule::standard(f2, 2);
    const int n = 0;
    const auto c = orthogonal_cover(l, CoverMode::interval);
    o.require(validate_cover(c.family).valid(), "interval cover valid");
    o.require(check_nerve_hypotheses(c.family, n).status == VerdictStatus::verified, "hypotheses at n = 0");
    o.require(homology_connected(c.space.poset, n - 1).verified(), "U_(0,g) (n-1)-connected");

    const auto p = orthogonal_cover(l, CoverMode::positive);
    o.require(check_nerve_hypotheses(p.family, n).status == VerdictStatus::verified, "positive hypotheses at n = 0");
    const auto w = check_nerve_witness(p.family, *p.witness);
    o.require(w.passed(), "witness and zig-zag to u_0 (" + std::to_string(w.checked) + " checks)");
    o.require(homology_connected(p.space.poset, n).verified(), "U_>0 n-connected");

    SuiteConfig cfg;
    const auto r = run_suite("nerve", cfg);
    o.require(claim_status(r, "nerve.negative-controls.g2") == std::string("verified"),
              "emptied member and corrupted witness refuted");
}

void criterion10(Outcome& o) {
    SuiteConfig cfg;
    cfg.genus = 3;
    const auto r = run_suite("trees", cfg);
    const ClaimRecord* unique = nullptr;
    claim_status(r, "utree.unique-contraction", &unique);
    o.require(unique && unique->verdict == VerdictStatus::verified && unique->counts["trees"] == 24,
              "unique contraction over 24 trees, " + (unique ? unique->counts["checks"].dump() : std::string("0")) +
                  " pairs");
    for (const char* id : {"T.contractible.m2", "T.contractible.m3", "T.contractible.m4"})
        o.require(claim_status(r, id) == std::string("verified"), id);
    o.require(claim_status(r, "TD.forget.g3") == std::string("verified"), "TD(F2^6) -> D+ homology isomorphism");
    const auto td = build_TD(SymplecticModule::standard(f2, 3));
    o.require(same_homology(reduced_homology(td.poset), reduced_homology(td.dplus->poset)), "equal homology groups");
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        double limit_seconds;  // 0: no limit
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, 10, criterion1},  {2, 600, criterion2}, {3, 0, criterion3}, {4, 900, criterion4},
        {5, 0, criterion5},   {6, 0, criterion6},   {7, 0, criterion7}, {8, 60, criterion8},
        {9, 0, criterion9},   {10, 0, criterion10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("error: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) o.require(false, "over the time limit");
        if (!o.pass) ++failed;
        std::string detail = o.detail.str();
        if (detail.size() >= 2) detail.resize(detail.size() - 2);
        std::printf("criterion %d: %s (%s; %.2fs%s)\n", c.number, o.pass ? "PASS" : "FAIL", detail.c_str(), seconds,
                    c.limit_seconds > 0 ? (" of " + std::to_string(static_cast<int>(c.limit_seconds)) + "s").c_str() : "");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
