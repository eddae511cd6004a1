#include <doctest.h>

#include <algorithm>

#include "cmposet/homology.hpp"
#include "cmposet/poset_ops.hpp"
#include "cmposet/suites.hpp"

using namespace cmposet;

namespace {

// Face poset of a simplicial complex given by its facets (vertex bitmasks).
FinitePoset face_poset(const std::vector<unsigned>& facets) {
    std::vector<unsigned> faces;
    for (unsigned f : facets)
        for (unsigned s = f; s != 0; s = (s - 1) & f)
            if (std::find(faces.begin(), faces.end(), s) == faces.end()) faces.push_back(s);
    std::sort(faces.begin(), faces.end());
    std::vector<std::string> labels;
    for (unsigned s : faces) labels.push_back(std::to_string(s));
    std::vector<Relation> rel;
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (i != j && (faces[i] & faces[j]) == faces[i]) rel.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
    return FinitePoset::from_relations(labels, rel);
}

unsigned tri(int a, int b, int c) { return (1u << a) | (1u << b) | (1u << c); }

// Six-vertex triangulation of the projective plane.
FinitePoset projective_plane() {
    return face_poset({tri(0, 1, 2), tri(0, 2, 3), tri(0, 3, 4), tri(0, 4, 5), tri(0, 5, 1), tri(1, 2, 4), tri(2, 3, 5),
                       tri(3, 4, 1), tri(4, 5, 2), tri(5, 1, 3)});
}

// Chains counted directly by depth-first extension.
std::vector<std::size_t> chain_counts(const FinitePoset& p) {
    std::vector<std::size_t> counts;
    std::vector<Index> stack;
    auto rec = [&](auto&& self, Index last) -> void {
        const auto d = stack.size() - 1;
        if (counts.size() <= d) counts.resize(d + 1, 0);
        ++counts[d];
        p.for_each_above(last, [&](Index y) {
            stack.push_back(y);
            self(self, y);
            stack.pop_back();
        });
    };
    for (Index x = 0; x < p.size(); ++x) {
        stack = {x};
        rec(rec, x);
    }
    return counts;
}

}  // namespace

TEST_CASE("empty and one-point complexes") {
    const auto e = reduced_homology(FinitePoset{});
    CHECK(e.betti_at(-1) == 1);
    const auto p = reduced_homology(FinitePoset::antichain({"x"}));
    CHECK(p.vanishes_through(5));
}

TEST_CASE("antichains, circles and spheres") {
    CHECK(reduced_homology(FinitePoset::antichain({"a", "b", "c", "d"})).betti_at(0) == 3);
    // proper nonempty faces of a 3-simplex: a 2-sphere
    std::vector<unsigned> facets;
    for (int skip = 0; skip < 4; ++skip) facets.push_back(0xFu & ~(1u << skip));
    const auto s2 = reduced_homology(face_poset(facets));
    CHECK(s2.betti_at(0) == 0);
    CHECK(s2.betti_at(1) == 0);
    CHECK(s2.betti_at(2) == 1);
    CHECK(s2.complete);
}

TEST_CASE("cone is acyclic") {
    std::uint64_t state = 3;
    for (int i = 0; i < 20; ++i) {
        auto p = random_poset(state, 6, 0.3);
        const auto cone = join(FinitePoset::antichain({"bottom"}), p);
        CHECK(reduced_homology(cone).vanishes_through(10));
    }
}

TEST_CASE("projective plane has Z/2 torsion in degree 1") {
    const auto h = reduced_homology(projective_plane());
    CHECK(h.betti_at(0) == 0);
    CHECK(h.betti_at(1) == 0);
    CHECK(h.betti_at(2) == 0);
    CHECK(h.torsion_at(1) == std::vector<BigInt>{2});
    CHECK(h.torsion_at(2).empty());
}

TEST_CASE("order complex counts") {
    const OrderComplex c(FinitePoset::chain({"a", "b"}));
    CHECK(c.counts() == std::vector<std::size_t>{2, 1});
    std::vector<std::string> labels;
    for (int i = 0; i < 20; ++i) labels.push_back("p" + std::to_string(i));
    const OrderComplex a(FinitePoset::antichain(labels));
    CHECK(a.counts() == std::vector<std::size_t>{20});
    CHECK_THROWS_AS(OrderComplex(FinitePoset::antichain(labels), 10, 5), BudgetExceeded);
}

TEST_CASE("property: Euler characteristic and boundary squares") {
    std::uint64_t state = 77;
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_poset(state, 1 + static_cast<int>(next_random(state) % 9), 0.45);
        const auto counts = chain_counts(p);
        const OrderComplex k(p);
        CHECK(k.counts() == counts);
        for (int d = 1; d <= k.dimension(); ++d) CHECK(multiply(k.boundary(d - 1), k.boundary(d)).nonzeros() == 0);
        const auto h = reduced_homology(k);
        long long chi = -1;
        for (std::size_t d = 0; d < counts.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[d]);
        long long alt = 0;
        for (int d = -1; d <= k.dimension(); ++d) alt += (((d % 2) + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti_at(d));
        CHECK(alt == chi);
        CHECK(same_homology(h, reduced_homology(barycentric_subdivision(p))));
        CHECK(same_homology(h, reduced_homology(opposite(p))));
    }
}

TEST_CASE("relative homology") {
    const auto rp2 = projective_plane();
    const std::vector<bool> all(static_cast<std::size_t>(rp2.size()), true);
    const auto whole = relative_homology(rp2, all);
    for (int k = 0; k <= 3; ++k) CHECK(whole.zero_at(k));

    // (cone on X, X): H_k(pair) = reduced H_{k-1}(X)
    std::uint64_t state = 8;
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_poset(state, 1 + static_cast<int>(next_random(state) % 6), 0.3);
        const auto cone = join(x, FinitePoset::antichain({"apex"}));
        std::vector<bool> sub(static_cast<std::size_t>(cone.size()), true);
        sub.back() = false;
        const auto rel = relative_homology(cone, sub);
        const auto hx = reduced_homology(x);
        for (int k = 0; k <= x.dimension() + 1; ++k) {
            CHECK(rel.betti_at(k) == hx.betti_at(k - 1));
            CHECK(rel.torsion_at(k) == hx.torsion_at(k - 1));
        }
    }
}

TEST_CASE("truncated computation") {
    const auto h = reduced_homology(projective_plane(), 0);
    CHECK(h.computed_through == 0);
    CHECK(h.vanishes_through(0));
    CHECK_THROWS_AS(h.vanishes_through(1), std::out_of_range);
}
