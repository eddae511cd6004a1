#include <doctest.h>

#include <algorithm>
#include <map>

#include "cmposet/nerve.hpp"
#include "cmposet/set_partitions.hpp"
#include "cmposet/stability.hpp"

using namespace cmposet;

namespace {

// Bell numbers from the Bell triangle.
std::vector<long> bell_numbers(int m) {
    std::vector<long> bell{1};
    std::vector<long> row{1};
    for (int i = 1; i <= m; ++i) {
        std::vector<long> next{row.back()};
        for (long x : row) next.push_back(next.back() + x);
        bell.push_back(next.front());
        row = next;
    }
    return bell;
}

SetPartition rgs_from_blocks(int m, const std::vector<std::uint32_t>& blocks) {
    std::vector<int> owner(static_cast<std::size_t>(m), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int i = 0; i < m; ++i)
            if (blocks[b] >> i & 1U) owner[static_cast<std::size_t>(i)] = static_cast<int>(b);
    std::map<int, int> renumber;
    SetPartition p;
    for (int o : owner) p.push_back(renumber.try_emplace(o, static_cast<int>(renumber.size())).first->second);
    return p;
}

IntMatrix unit_rows(int n, std::initializer_list<int> idx) {
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(idx.size()), n);
    int i = 0;
    for (int k : idx) m(i++, k) = 1;
    return m;
}

}  // namespace

TEST_CASE("set partition basics") {
    CHECK(block_count({0, 1, 0}) == 2);
    CHECK(partition_text({0, 0, 1}) == "{0 1|2}");
    CHECK(partition_refines({0, 1, 2}, {0, 0, 1}));
    CHECK_FALSE(partition_refines({0, 0, 1}, {0, 1, 1}));
    const auto bell = bell_numbers(6);
    for (int m = 1; m <= 6; ++m) CHECK(static_cast<long>(all_set_partitions(m).size()) == bell[static_cast<std::size_t>(m)]);
}

TEST_CASE("partition posets") {
    const auto bell = bell_numbers(5);
    for (int m = 2; m <= 5; ++m) {
        auto p = partitions_poset(m);
        CHECK(p.poset.size() == bell[static_cast<std::size_t>(m)] - 1);
        for (Index i = 0; i < p.poset.size(); ++i) {
            CHECK(p.poset.height(i) == block_count(p.partitions[static_cast<std::size_t>(i)]) - 1);
            for (Index j = 0; j < p.poset.size(); ++j)
                CHECK(p.poset.less(i, j) ==
                      (i != j && partition_refines(p.partitions[static_cast<std::size_t>(j)],
                                                   p.partitions[static_cast<std::size_t>(i)])));
        }
    }
    CHECK(partitions_poset(3, true).poset.size() == 5);
    CHECK(partitions_poset(3, false, false).poset.size() == 3);
    CHECK_THROWS(partitions_poset(1));
}

TEST_CASE("g_plus map") {
    for (int m = 2; m <= 4; ++m) {
        auto g = g_plus_map(m);
        CHECK(g.proper_subsets.size() == (1 << m) - 2);
        CHECK(is_monotone(g.map.source(), g.map.target(), g.map.assignment()));
        const std::uint32_t all = (1U << m) - 1;
        for (Index c = 0; c < g.nested.poset.size(); ++c) {
            std::vector<std::uint32_t> blocks;
            std::uint32_t prev = 0;
            for (Index x : g.nested.chains[static_cast<std::size_t>(c)]) {
                const auto s = g.subsets[static_cast<std::size_t>(x)];
                blocks.push_back(s & ~prev);
                prev = s;
            }
            blocks.push_back(all & ~prev);
            CHECK(g.map(c) == g.target->find(rgs_from_blocks(m, blocks)));
        }
    }
}

TEST_CASE("upper intervals of partition posets are products") {
    auto p = partitions_poset(5);
    for (Index y = 0; y < p.poset.size(); ++y) {
        const auto& part = p.partitions[static_cast<std::size_t>(y)];
        auto expected = partition_product_upper(part);
        auto up = above(p.poset, y);
        CHECK(up.size() == expected.size());
        if (up.size() <= 20) CHECK(find_isomorphism(up, expected).has_value());
    }
    CHECK(partition_product_upper({0, 0, 1, 1}).size() == 3);
}

TEST_CASE("partition sequences") {
    auto p = partition_sequences_poset(parts_from_sizes({2, 1}));
    CHECK(p.size() == 7);
    CHECK(homology_spherical(p, 1).verified());
    CHECK(parts_from_sizes({2, 1, 3}) == std::vector<int>{0, 0, 1, 2, 2, 2});
    for (const auto& sizes : std::vector<std::vector<int>>{{1}, {3}, {1, 1}, {2, 2}, {1, 2, 1}}) {
        auto q = partition_sequences_poset(parts_from_sizes(sizes));
        CHECK(homology_spherical(q, static_cast<int>(sizes.size()) - 1).verified());
    }
}

TEST_CASE("split unimodular sequences") {
    const auto f2 = ScalarRing::prime_field(2);
    auto h1 = build_HU(1, f2);
    CHECK(h1.poset.size() == 6);
    auto h2 = build_HU(2, f2);
    CHECK(h2.poset.size() == 840);
    auto l = SymplecticModule::standard(f2, 2);
    for (Index i = 0; i < h2.poset.size(); ++i) {
        const auto& s = h2.sequences[static_cast<std::size_t>(i)];
        CHECK(is_split_unimodular(l, s));
        CHECK(h2.poset.height(i) == s.rows() / 2 - 1);
    }
    CHECK_FALSE(is_split_unimodular(l, unit_rows(4, {0, 2})));
    CHECK(hu_leq(unit_rows(4, {2, 3}), unit_rows(4, {0, 1, 2, 3})));
    CHECK_FALSE(hu_leq(unit_rows(4, {3, 2}), unit_rows(4, {0, 1, 2, 3})));

    auto one = hu_decomposition(l, unit_rows(4, {0, 1}));
    CHECK(one.size() == 2);
    CHECK(genus_one_count(one) == 2);
    auto two = hu_decomposition(l, unit_rows(4, {0, 1, 2, 3}));
    CHECK(two.size() == 2);
    auto l3 = SymplecticModule::standard(f2, 3);
    auto partial = hu_decomposition(l3, unit_rows(6, {0, 1}));
    CHECK(genus_one_count(partial) == 1);
    CHECK(higher_genus_count(partial) == 1);

    CHECK(hu_connectivity_bound(1) == -1);
    CHECK(hu_connectivity_bound(2) == -1);
    CHECK(hu_connectivity_bound(3) == 0);
    CHECK(hu_connectivity_bound(6) == 1);
    CHECK_THROWS(hu_decomposition_map(1, f2));
}

TEST_CASE("dual fibre-link conditions for HU_2 -> D_+") {
    auto f = hu_decomposition_map(2, ScalarRing::prime_field(2));
    CHECK(f.target->poset.size() == 10);
    CHECK(is_monotone(f.map.source(), f.map.target(), f.map.assignment()));
    const auto& elems = f.target->elements;
    auto tau = [&](Index y) { return genus_one_count(elems[static_cast<std::size_t>(y)]) - 1; };
    auto r = check_corollary_conn(f.map, tau, -1, CorollaryVariant::C_op);
    CHECK(r.rows.size() == 10);
    CHECK(r.hypotheses == VerdictStatus::verified);
    REQUIRE(r.conclusion);
    CHECK(r.conclusion->verified());
    for (const auto& row : r.rows) {
        CHECK(row.fiber_level == row.t - 1);
        CHECK(row.fiber.verified());
    }
}
