#include <doctest.h>

#include <algorithm>
#include <set>

#include "cmposet/lattice_posets.hpp"
#include "cmposet/nerve.hpp"

using namespace cmposet;

namespace {

const ScalarRing f2 = ScalarRing::prime_field(2);

IntMatrix unit_rows(int n, std::initializer_list<int> idx) {
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(idx.size()), n);
    int i = 0;
    for (int k : idx) m(i++, k) = 1;
    return m;
}

Submodule span_units(int n, std::initializer_list<int> idx) { return Submodule::span(f2, n, unit_rows(n, idx)); }

}  // namespace

TEST_CASE("U(L) sizes, heights and order") {
    auto u1 = build_U(SymplecticModule::standard(f2, 1));
    CHECK(u1.poset.size() == 2);
    auto u2 = build_U(SymplecticModule::standard(f2, 2));
    CHECK(u2.poset.size() == 22);
    CHECK(u2.poset.dimension() == 2);
    for (Index i = 0; i < u2.poset.size(); ++i) {
        CHECK(u2.poset.height(i) * 2 == u2.elements[static_cast<std::size_t>(i)].rank());
        CHECK(u2.find(u2.elements[static_cast<std::size_t>(i)]) == i);
        for (Index j = 0; j < u2.poset.size(); ++j)
            CHECK(u2.poset.less(i, j) ==
                  (i != j && u2.elements[static_cast<std::size_t>(j)].contains(u2.elements[static_cast<std::size_t>(i)])));
    }
    CHECK(u2.find(span_units(4, {0, 2})) == -1);
    CHECK(build_U(SymplecticModule::standard(f2, 3), 2).poset.size() == 674);
    CHECK(build_U(SymplecticModule::standard(ScalarRing::prime_field(3), 2)).poset.size() == 92);
    CHECK_THROWS(build_U(SymplecticModule::standard(ScalarRing::integers(), 1)));
}

TEST_CASE("lower and upper intervals of U(L)") {
    auto l = SymplecticModule::standard(f2, 3);
    auto u = build_U(l);

    auto big = span_units(6, {0, 1, 2, 3});
    auto within = build_U_within(l, big);
    std::set<Submodule> below;
    for (const auto& s : u.elements)
        if (big.contains(s)) below.insert(s);
    CHECK(below == std::set<Submodule>(within.elements.begin(), within.elements.end()));
    CHECK(within.poset.size() == 22);

    auto plane = span_units(6, {0, 1});
    auto pp = perp(l, plane);
    auto complement = build_U_within(l, pp);
    std::vector<Index> image;
    std::set<Submodule> seen;
    for (std::size_t i = 0; i < u.elements.size(); ++i) {
        const auto& w = u.elements[i];
        if (w == plane || !w.contains(plane)) continue;
        auto x = intersect(w, pp);
        REQUIRE(x.rank() > 0);
        REQUIRE(complement.find(x) >= 0);
        seen.insert(x);
        image.push_back(static_cast<Index>(i));
    }
    CHECK(seen.size() == image.size());
    CHECK(image.size() + 1 == complement.elements.size());
    // order of U_{>u} against U(u^perp)_{>0}, element by element
    for (std::size_t a = 0; a < image.size(); ++a)
        for (std::size_t b = 0; b < image.size(); ++b) {
            auto xa = complement.find(intersect(u.elements[static_cast<std::size_t>(image[a])], pp));
            auto xb = complement.find(intersect(u.elements[static_cast<std::size_t>(image[b])], pp));
            CHECK(u.poset.less(image[a], image[b]) == complement.poset.less(xa, xb));
        }
}

TEST_CASE("I(L) sizes and subword order") {
    auto i1 = build_I(SymplecticModule::standard(f2, 1));
    CHECK(i1.poset.size() == 3);
    CHECK(i1.poset.relation_count() == 0);
    auto i2 = build_I(SymplecticModule::standard(f2, 2));
    CHECK(i2.poset.size() == 105);
    CHECK(build_I(SymplecticModule::standard(f2, 1, 1)).poset.size() == 6);
    CHECK(build_I(SymplecticModule::standard(f2, 2, 1)).poset.size() == 390);

    auto l = SymplecticModule::standard(f2, 2);
    for (Index v = 0; v < i2.poset.size(); ++v) {
        const auto& seq = i2.sequences[static_cast<std::size_t>(v)];
        CHECK(i2.poset.height(v) == seq.rows() - 1);
        CHECK(is_isotropic_partial_basis(l, seq));
        CHECK(static_cast<int>(i2.poset.below(v).size()) == (1 << seq.rows()) - 2);
    }
}

TEST_CASE("subword poset") {
    auto p = subword_poset({{1}, {2}, {1, 2}, {2, 1}}, {"1", "2", "12", "21"});
    CHECK(p.less(0, 2));
    CHECK(p.less(1, 3));
    CHECK_FALSE(p.comparable(2, 3));
    CHECK(p.height(2) == 1);
    CHECK_THROWS(subword_poset({{1, 2}}, {"12"}));
}

TEST_CASE("D(L) sizes and refinement") {
    auto l2 = SymplecticModule::standard(f2, 2);
    auto d = build_D(l2, false);
    CHECK(d.poset.size() == 11);
    auto dp = build_D(l2, true);
    CHECK(dp.poset.size() == 10);
    CHECK(dp.poset.relation_count() == 0);
    for (Index i = 0; i < d.poset.size(); ++i) {
        const auto& a = d.elements[static_cast<std::size_t>(i)];
        CHECK(is_decomposition(l2, a));
        CHECK(d.poset.height(i) == static_cast<int>(a.size()) - 1);
        for (Index j = 0; j < d.poset.size(); ++j)
            CHECK(d.poset.less(i, j) == (i != j && refines(d.elements[static_cast<std::size_t>(j)], a)));
    }

    auto l3 = SymplecticModule::standard(f2, 3);
    auto d3 = build_D(l3, false);
    CHECK(d3.poset.size() == 1457);
    CHECK(build_D(l3, true).poset.size() == 1456);
    CHECK(d3.find(make_decomposition({Submodule::whole(f2, 6)})) >= 0);

    CHECK_FALSE(is_decomposition(l2, make_decomposition({span_units(4, {0, 1})})));
    CHECK_FALSE(is_decomposition(l2, make_decomposition({span_units(4, {0, 1}), span_units(4, {0, 1})})));
    CHECK(refines(make_decomposition({span_units(4, {0, 1}), span_units(4, {2, 3})}),
                  make_decomposition({Submodule::whole(f2, 4)})));
    CHECK_THROWS(build_D(SymplecticModule::standard(f2, 1, 1), false));
}

TEST_CASE("flag decompositions") {
    auto l = SymplecticModule::standard(f2, 3);
    auto a = span_units(6, {0, 1});
    auto b = span_units(6, {0, 1, 2, 3});
    auto whole = Submodule::whole(f2, 6);

    auto d1 = flag_decomposition(l, {a});
    CHECK(d1 == make_decomposition({a, span_units(6, {2, 3, 4, 5})}));
    auto d2 = flag_decomposition(l, {a, b});
    CHECK(d2 == make_decomposition({a, span_units(6, {2, 3}), span_units(6, {4, 5})}));
    CHECK(flag_decomposition(l, {a, b, whole}) == d2);
    CHECK(flag_decomposition(l, {whole}) == make_decomposition({whole}));

    auto fm = flag_to_decomposition(SymplecticModule::standard(f2, 2));
    CHECK(fm.positive.poset.size() == 21);
    CHECK(fm.chains.poset.size() == 41);
    CHECK(is_monotone(fm.map.source(), fm.map.target(), fm.map.assignment()));
    auto fm3 = flag_to_decomposition(l, 2);
    CHECK(fm3.chains.poset.size() == 14785);
    CHECK(is_monotone(fm3.map.source(), fm3.map.target(), fm3.map.assignment()));
}

TEST_CASE("flag map meets the dual fibre-link conditions") {
    auto fm = flag_to_decomposition(SymplecticModule::standard(f2, 3));
    const auto& target = fm.target->poset;
    auto r = check_corollary_conn(fm.map, [&](Index y) { return target.height(y); }, 2, CorollaryVariant::C_op);
    CHECK(r.rows.size() == 1457);
    CHECK(r.hypotheses == VerdictStatus::verified);
    REQUIRE(r.conclusion);
    CHECK(r.conclusion->verified());
}
