#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cmposet/poset_ops.hpp"
#include "cmposet/suites.hpp"
#include "cmposet/utrees.hpp"

using namespace cmposet;

namespace {

UTree path3() {
    UTree t;
    t.vertex_count = 3;
    t.edges = {{0, 1}, {1, 2}};
    t.position = {0, 1, 2};
    return t;
}

UTree star3(std::vector<int> position) {
    UTree t;
    t.vertex_count = 4;
    t.edges = {{0, 1}, {0, 2}, {0, 3}};
    t.position = std::move(position);
    return t;
}

UTree relabel_vertices(const UTree& t, const std::vector<int>& perm) {
    UTree r;
    r.vertex_count = t.vertex_count;
    for (auto [a, b] : t.edges) {
        int x = perm[static_cast<std::size_t>(a)];
        int y = perm[static_cast<std::size_t>(b)];
        r.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::shuffle(r.edges.begin(), r.edges.end(), std::mt19937(7));
    for (int p : t.position) r.position.push_back(perm[static_cast<std::size_t>(p)]);
    return r;
}

std::vector<std::vector<int>> nonempty_subsets(int k) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("u-tree validity") {
    CHECK_FALSE(utree_violation(path3()).has_value());
    CHECK(path3().strict());
    CHECK(path3().low_degree_vertices() == std::vector<int>{0, 1, 2});
    CHECK_FALSE(utree_violation(star3({1, 2, 3})).has_value());
    CHECK(utree_violation(star3({1, 2})).has_value());
    UTree cyc;
    cyc.vertex_count = 3;
    cyc.edges = {{0, 1}, {1, 2}, {0, 2}};
    cyc.position = {0, 1, 2};
    CHECK(utree_violation(cyc).has_value());
    UTree shared = path3();
    shared.position = {0, 1, 2, 2};
    CHECK_FALSE(shared.strict());
}

TEST_CASE("canonical form is invariant under vertex renaming") {
    auto trees = trees_up_to(6);
    std::uint64_t state = 3;
    for (const auto& t : trees) {
        std::vector<int> perm(static_cast<std::size_t>(t.vertex_count));
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 5; ++rep) {
            std::shuffle(perm.begin(), perm.end(), std::mt19937(static_cast<unsigned>(next_random(state))));
            CHECK(relabel_vertices(t, perm).canonical() == t.canonical());
        }
    }
    // leaves of a star are interchangeable, labels on a path are not
    CHECK(star3({1, 2, 3}).canonical() == star3({2, 1, 3}).canonical());
    auto a = path3();
    auto b = path3();
    b.position = {1, 0, 2};
    CHECK(a.canonical() != b.canonical());
}

TEST_CASE("contractions") {
    auto c = contract(path3(), {0});
    CHECK(c.vertex_count == 2);
    CHECK(c.edge_count() == 1);
    CHECK(c.position[1] == c.position[2]);
    CHECK(contract(path3(), {0, 1}).canonical() == path3().canonical());
    CHECK_THROWS_AS(contract(path3(), {}), std::invalid_argument);
    auto s = contract(star3({1, 2, 3}), {2});
    CHECK(s.vertex_count == 2);
    CHECK(s.position[0] == s.position[1]);
    CHECK(contraction_unique(star3({1, 2, 3}), {0}, {1}));
}

TEST_CASE("tree counts") {
    auto trees = trees_up_to(6);
    std::vector<int> by_edges(7, 0);
    for (const auto& t : trees) ++by_edges[static_cast<std::size_t>(t.edge_count())];
    CHECK(by_edges == std::vector<int>{0, 1, 1, 2, 3, 6, 11});
    CHECK(trees.size() == 24);

    CHECK(enumerate_trees(2, true).size() == 1);
    CHECK(enumerate_trees(3, true).size() == 4);
    for (int m = 2; m <= 4; ++m)
        for (const auto& t : enumerate_trees(m, false)) {
            CHECK_FALSE(utree_violation(t).has_value());
            CHECK(t.label_count() == m);
        }
}

TEST_CASE("distinct edge sets give distinct contractions") {
    for (const auto& t : trees_up_to(5)) {
        const auto subsets = nonempty_subsets(t.edge_count());
        std::set<std::string> forms;
        for (const auto& e : subsets) forms.insert(contract(t, e).canonical());
        CHECK(forms.size() == subsets.size());
        if (subsets.size() >= 2) CHECK(contraction_unique(t, subsets.front(), subsets.back()));
    }
}

TEST_CASE("rigidity") {
    CHECK(is_rigid(path3()));
    CHECK(is_rigid(star3({1, 2, 3})));
    CHECK_FALSE(is_rigid(star3({1})));
    for (int m = 2; m <= 4; ++m)
        for (const auto& t : enumerate_trees(m, false)) CHECK(is_rigid(t));
}

TEST_CASE("tree posets") {
    CHECK(build_T(2).poset.size() == 1);
    CHECK(build_T(3).poset.size() == 7);
    auto t4 = build_T(4);
    CHECK(t4.poset.size() == 63);
    for (Index x = 0; x < t4.poset.size(); ++x) {
        const int k = t4.trees[static_cast<std::size_t>(x)].edge_count();
        CHECK(t4.poset.height(x) == k - 1);
        auto down = t4.poset.below(x);
        down.push_back(x);
        CHECK(static_cast<int>(down.size()) == (1 << k) - 1);
        if (k <= 3) {
            std::vector<std::string> labels;
            std::vector<Relation> rel;
            for (int a = 1; a < (1 << k); ++a) {
                labels.push_back(std::to_string(a));
                for (int b = 1; b < (1 << k); ++b)
                    if (a != b && (a & b) == a) rel.emplace_back(a - 1, b - 1);
            }
            CHECK(find_isomorphism(t4.poset.induced(down), FinitePoset::from_relations(labels, rel)).has_value());
        }
    }
    CHECK(homology_connected(t4.poset, 1).verified());
}

TEST_CASE("tree decompositions") {
    const auto f2 = ScalarRing::prime_field(2);
    auto td = build_TD(SymplecticModule::standard(f2, 2));
    CHECK(td.poset.size() == 10);
    auto p = tree_forget_map(td);
    CHECK(find_isomorphism(td.poset, td.dplus->poset).has_value());
    CHECK(is_monotone(p.source(), p.target(), p.assignment()));
    auto td3 = build_TD(SymplecticModule::standard(f2, 3));
    CHECK(td3.poset.size() == 4816);
    for (Index x = 0; x < td3.poset.size(); ++x) {
        const auto& tree = td3.trees[static_cast<std::size_t>(x)];
        CHECK(tree.strict());
        CHECK(tree.label_count() ==
              static_cast<int>(td3.dplus->elements[static_cast<std::size_t>(td3.decomposition[static_cast<std::size_t>(x)])].size()));
    }
}
