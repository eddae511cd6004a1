#include <doctest.h>

#include "cmposet/homology.hpp"
#include "cmposet/poset_ops.hpp"
#include "cmposet/suites.hpp"

using namespace cmposet;

namespace {

FinitePoset pts(std::initializer_list<const char*> names) {
    std::vector<std::string> l(names.begin(), names.end());
    return FinitePoset::antichain(l);
}

std::size_t betti(const FinitePoset& p, int k) { return reduced_homology(p).betti_at(k); }

FinitePoset hollow_triangle() {
    // faces of the boundary of a 2-simplex
    const std::vector<Relation> rel{{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}};
    return FinitePoset::from_relations({"0", "1", "2", "01", "12", "02"}, rel);
}

}  // namespace

TEST_CASE("opposite") {
    const auto c = FinitePoset::chain({"a", "b"}).with_height({0, 1});
    const auto o = opposite(c);
    CHECK(o.less(1, 0));
    CHECK(o.height(0) == 0);
    CHECK(o.height(1) == -1);
    CHECK(opposite(o) == c);
    const auto a = pts({"x", "y", "z"});
    CHECK(opposite(a) == a);
}

TEST_CASE("join") {
    const auto s0 = pts({"a", "b"});
    const auto s0b = pts({"c", "d"});
    const auto circle = join(s0, s0b);
    CHECK(circle.size() == 4);
    CHECK(betti(circle, 0) == 0);
    CHECK(betti(circle, 1) == 1);
    CHECK(join(FinitePoset{}, s0) == s0);
    const auto sphere = join(join(s0, s0b), pts({"e", "f"}));
    CHECK(sphere.size() == 6);
    CHECK(betti(sphere, 2) == 1);
    // associativity up to the identity on labels
    const auto other = join(s0, join(s0b, pts({"e", "f"})));
    CHECK(other == sphere);
}

TEST_CASE("thick join") {
    const auto x = pts({"x"});
    const auto y = pts({"y"});
    const auto t = thick_join(x, y);
    CHECK(t.size() == 3);
    CHECK(t.less(0, thick_join_pair(1, 1, 0, 0)));
    CHECK(t.less(1, thick_join_pair(1, 1, 0, 0)));
    CHECK(reduced_homology(t).vanishes_through(2));

    const auto a = pts({"a", "b"});
    const auto b = pts({"c", "d"});
    const auto tj = thick_join(a, b);
    CHECK(tj.size() == 8);
    CHECK(betti(tj, 1) == 1);
    CHECK(thick_join(a, FinitePoset{}) == a);
    // symmetric up to isomorphism
    CHECK(find_isomorphism(thick_join(a, pts({"u", "v", "w"})), thick_join(pts({"u", "v", "w"}), a)).has_value());
}

TEST_CASE("collapse map") {
    const auto h = collapse_map(pts({"x"}), pts({"y"}));
    CHECK(h.assignment() == std::vector<Index>{0, 1, 1});
    std::uint64_t state = 5;
    for (int i = 0; i < 20; ++i) {
        const auto x = random_poset(state, 4, 0.4);
        const auto y = random_poset(state, 3, 0.4);
        const auto c = collapse_map(x, y);
        CHECK(same_homology(reduced_homology(c.source()), reduced_homology(c.target())));
        // homology isomorphism: the pair (M(h), X ⋈ Y) is acyclic
        const auto m = mapping_cylinder(c);
        std::vector<bool> sub(static_cast<std::size_t>(m.poset.size()), false);
        for (Index k = 0; k < m.source_count; ++k) sub[static_cast<std::size_t>(k)] = true;
        const auto rel = relative_homology(m.poset, sub);
        for (int k = 0; k <= rel.computed_through; ++k) CHECK(rel.zero_at(k));
    }
}

TEST_CASE("mapping cylinder") {
    const auto x = pts({"x"});
    const auto y = FinitePoset::antichain({"y"}).with_height({0});
    const PosetMap f(x, y, {0});
    const auto m = mapping_cylinder(f);
    CHECK(m.poset.size() == 2);
    CHECK(m.poset.less(m.target_position[0], 0));

    // truncations
    const auto low = mapping_cylinder(f, CylinderMode::truncated, -1);
    CHECK(low.poset.size() == 1);
    const auto high = mapping_cylinder(f, CylinderMode::truncated, 5);
    CHECK(high.poset.size() == 2);
    const auto cone = mapping_cylinder(f, CylinderMode::cone);
    CHECK(cone.cone_vertex.has_value());
    CHECK_THROWS(mapping_cylinder(PosetMap(x, pts({"y"}), {0}), CylinderMode::truncated, 0));

    const auto d = dual_cylinder(f);
    CHECK(d.poset.less(0, d.target_position[0]));
}

TEST_CASE("property: cylinders on random maps") {
    std::uint64_t state = 99;
    int done = 0;
    while (done < 50) {
        const auto x = random_poset(state, 1 + static_cast<int>(next_random(state) % 6), 0.4);
        const auto y = random_poset(state, 1 + static_cast<int>(next_random(state) % 6), 0.4).with_standard_height();
        const auto a = random_monotone_map(state, x, y);
        if (!a) continue;
        ++done;
        const PosetMap f(x, y, *a);
        const auto m = mapping_cylinder(f);
        for (Index i = 0; i < x.size(); ++i)
            for (Index j = 0; j < y.size(); ++j)
                CHECK(m.poset.less(m.target_position[static_cast<std::size_t>(j)], i) == y.leq(j, f(i)));
        CHECK(same_homology(reduced_homology(m.poset), reduced_homology(y)));
        CHECK(same_homology(reduced_homology(dual_cylinder(f).poset), reduced_homology(y)));
        CHECK(find_isomorphism(opposite(dual_cylinder(f).poset), mapping_cylinder(f.opposite()).poset).has_value());
        for (Index j = 0; j < y.size(); ++j) CHECK(cylinder_link_check(f, j));
    }
}

TEST_CASE("fibres") {
    const auto c = FinitePoset::chain({"a", "b", "c"});
    const PosetMap id(c, c, {0, 1, 2});
    CHECK(fiber(id, 1, FiberSide::under).elements == std::vector<Index>{0, 1});
    CHECK(fiber(id, 1, FiberSide::over).elements == std::vector<Index>{1, 2});
    const PosetMap constant(c, c, {1, 1, 1});
    CHECK(fiber(constant, 1, FiberSide::under).poset.size() == 3);
    CHECK(fiber(constant, 0, FiberSide::under).poset.empty());
}

TEST_CASE("links and intervals") {
    const auto c = FinitePoset::chain({"a", "b", "c"});
    CHECK(below(c, 2) == FinitePoset::chain({"a", "b"}));
    CHECK(above(c, 0).size() == 2);
    CHECK(open_interval(c, 0, 2).size() == 1);
    CHECK_THROWS_AS(open_interval(c, 2, 0), PosetError);
}

TEST_CASE("barycentric subdivision") {
    const auto s = barycentric_subdivision_chains(FinitePoset::chain({"a", "b"}));
    CHECK(s.poset.size() == 3);
    CHECK(reduced_homology(s.poset).vanishes_through(2));
    CHECK(barycentric_subdivision(pts({"a", "b"})).size() == 2);
    const auto t = hollow_triangle();
    const auto st = barycentric_subdivision(t);
    CHECK(st.size() == 12);
    CHECK(betti(t, 1) == 1);
    CHECK(same_homology(reduced_homology(st), reduced_homology(t)));
    CHECK(barycentric_subdivision(FinitePoset::chain({"a", "b", "c"})).size() == 7);
    CHECK_THROWS_AS(barycentric_subdivision_chains(FinitePoset::chain({"a", "b", "c"}), 3), BudgetExceeded);
}

TEST_CASE("isomorphism search") {
    CHECK(find_isomorphism(FinitePoset::chain({"a", "b"}), FinitePoset::chain({"x", "y"})).has_value());
    CHECK_FALSE(find_isomorphism(FinitePoset::chain({"a", "b"}), pts({"x", "y"})).has_value());
    const auto t = hollow_triangle();
    CHECK(find_isomorphism(t, opposite(t)).has_value());
}

TEST_CASE("cylinder link check on small maps") {
    const auto x = pts({"x"});
    const auto y = FinitePoset::antichain({"y"}).with_height({0});
    CHECK(cylinder_link_check(PosetMap(x, y, {0}), 0));
    const auto c = FinitePoset::chain({"a", "b", "c"}).with_standard_height();
    CHECK(cylinder_link_check(PosetMap(c, c, {0, 1, 2}), 2));
}
