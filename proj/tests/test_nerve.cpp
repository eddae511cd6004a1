#include <doctest.h>

#include <memory>

#include "cmposet/nerve.hpp"

using namespace cmposet;

namespace {

std::shared_ptr<const FinitePoset> shared_chain(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return std::make_shared<const FinitePoset>(FinitePoset::chain(labels).with_standard_height());
}

CoverFamily chain_cover(std::vector<std::vector<bool>> members) {
    return CoverFamily{shared_chain(2, "a"), shared_chain(2, "x"), std::move(members)};
}

}  // namespace

TEST_CASE("cover validation") {
    CHECK(validate_cover(chain_cover({{true, true}, {true, false}})).valid());
    // a < b needs X_a to contain X_b
    CHECK_FALSE(validate_cover(chain_cover({{true, false}, {true, true}})).valid());
    // members are down-closed
    CHECK_FALSE(validate_cover(chain_cover({{false, true}, {false, false}})).valid());
    CHECK_FALSE(validate_cover(chain_cover({{true, true}})).valid());

    auto c = chain_cover({{true, true}, {true, false}});
    CHECK(c.member_list(1) == std::vector<Index>{0});
    CHECK(c.containing(0) == std::vector<Index>{0, 1});
    CHECK(c.containing(1) == std::vector<Index>{0});
}

TEST_CASE("the poset Z") {
    auto single = CoverFamily{shared_chain(1, "a"), shared_chain(3, "x"), {{true, true, true}}};
    auto z1 = build_Z(single);
    CHECK(find_isomorphism(*z1.z, *single.space).has_value());

    auto c = chain_cover({{true, true}, {true, false}});
    auto z = build_Z(c);
    CHECK(z.z->size() == 3);
    for (Index i = 0; i < z.z->size(); ++i)
        for (Index j = 0; j < z.z->size(); ++j) {
            auto [a, x] = z.pairs[static_cast<std::size_t>(i)];
            auto [b, y] = z.pairs[static_cast<std::size_t>(j)];
            CHECK(z.z->leq(i, j) == (c.index->leq(b, a) && c.space->leq(x, y)));
        }
    for (Index i = 0; i < z.z->size(); ++i) {
        CHECK(z.g(i) == z.pairs[static_cast<std::size_t>(i)].second);
        CHECK(z.f(i) == z.pairs[static_cast<std::size_t>(i)].first);
    }
    CHECK_THROWS_AS(build_Z(chain_cover({{true, false}, {true, true}})), PosetError);
}

TEST_CASE("fibre-link conditions on an identity map") {
    auto y = FinitePoset::chain({"0", "1", "2"}).with_standard_height();
    PosetMap id(y, y, {0, 1, 2});
    auto r = check_corollary_conn(id, [](Index i) { return static_cast<int>(i); }, 2, CorollaryVariant::C);
    CHECK(r.hypotheses == VerdictStatus::verified);
    REQUIRE(r.conclusion);
    CHECK(r.conclusion->verified());
    CHECK(r.rows.size() == 3);
    CHECK(r.rows[2].link_level == 0);
    CHECK(r.rows[2].fiber_level == -1);

    auto op = check_corollary_conn(id, [](Index) { return 2; }, 2, CorollaryVariant::C_op, {}, false);
    CHECK(op.hypotheses == VerdictStatus::verified);
    CHECK_FALSE(op.conclusion);

    // the inclusion of two points into a chain is not 0-connected
    PosetMap pts(FinitePoset::antichain({"p", "q"}), y, {0, 2});
    CHECK(check_corollary_conn(pts, [](Index) { return 1; }, 0, CorollaryVariant::C).hypotheses ==
          VerdictStatus::refuted);
}

TEST_CASE("zig-zag rules") {
    auto d = FinitePoset::chain({"d0", "d1"});
    auto x = FinitePoset::chain({"x0", "x1", "x2"});
    ZigZag z{{{0, 1}, {1, 2}, {2, 2}}, {Comparison::leq, Comparison::leq}};
    CHECK(check_zigzag(d, x, z).empty());
    ZigZag down{{{1, 2}, {0, 0}}, {Comparison::geq}};
    CHECK(check_zigzag(d, x, down).empty());
    ZigZag wrong{{{1, 2}, {0, 0}}, {Comparison::leq}};
    CHECK_FALSE(check_zigzag(d, x, wrong).empty());
    ZigZag open_end{{{0, 1}, {1, 2}}, {Comparison::leq}};
    CHECK_FALSE(check_zigzag(d, x, open_end).empty());
    CHECK(check_zigzag(d, x, open_end, false).empty());
    ZigZag not_monotone{{{1, 0}, {2, 2}}, {Comparison::leq}};
    CHECK_FALSE(check_zigzag(d, x, not_monotone).empty());
    ZigZag bad_links{{{0, 1}, {2, 2}}, {}};
    CHECK_FALSE(check_zigzag(d, x, bad_links).empty());

    auto joined = concatenate(open_end, ZigZag{{{1, 2}, {2, 2}}, {Comparison::leq}});
    CHECK(joined.maps.size() == 3);
    CHECK(joined.links.size() == 2);
    CHECK(check_zigzag(d, x, joined).empty());
    CHECK_THROWS(concatenate(open_end, ZigZag{{{0, 0}}, {}}));
}

TEST_CASE("interval cover of U(F_2^4)") {
    auto l = SymplecticModule::standard(ScalarRing::prime_field(2), 2);
    auto c = orthogonal_cover(l, CoverMode::interval);
    CHECK(c.space.poset.size() == 20);
    CHECK(c.space.poset.relation_count() == 0);
    CHECK(c.index.poset.size() == 105);
    CHECK(validate_cover(c.family).valid());
    CHECK_FALSE(c.witness);
    auto h = check_nerve_hypotheses(c.family, 0);
    CHECK(h.status == VerdictStatus::verified);
    CHECK(h.failures().empty());
    CHECK(homology_connected(c.space.poset, -1).verified());
    CHECK(homology_connected(c.space.poset, 0).refuted());

    // X_v: planes orthogonal to every vector of v
    for (Index v = 0; v < c.index.poset.size(); ++v) {
        const auto& lifts = c.lifts[static_cast<std::size_t>(v)];
        for (Index x = 0; x < c.space.poset.size(); ++x) {
            const auto& u = c.space.elements[static_cast<std::size_t>(x)];
            CHECK(c.family.members[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] ==
                  l.pairing(lifts, u.basis()).isZero());
        }
    }
}

TEST_CASE("positive cover with witness") {
    for (const auto& l : {SymplecticModule::standard(ScalarRing::prime_field(2), 2),
                          SymplecticModule::standard(ScalarRing::prime_field(2), 2, 1),
                          SymplecticModule::standard(ScalarRing::prime_field(3), 1)}) {
        auto c = orthogonal_cover(l, CoverMode::positive);
        const int n = c.genus - 2;
        CHECK(check_nerve_hypotheses(c.family, n).status == VerdictStatus::verified);
        REQUIRE(c.witness);
        auto report = check_nerve_witness(c.family, *c.witness);
        CHECK(report.passed());
        if (c.genus >= 2) CHECK(report.checked > 0);
        CHECK(homology_connected(c.space.poset, n).verified());

        for (Index a = 0; a < c.family.index->size(); ++a) {
            auto dom = witness_domain(c.family, a);
            auto hs = hat_s(c.family, *c.witness, a);
            const auto nb = dom.lower.size();
            const auto nx = dom.members.size();
            REQUIRE(static_cast<std::size_t>(dom.poset.size()) == nb + nx + nb * nx);
            REQUIRE(hs.size() == static_cast<std::size_t>(dom.poset.size()));
            for (std::size_t i = 0; i < nb; ++i) CHECK(hs[i] == c.witness->s[static_cast<std::size_t>(a)][i]);
            for (std::size_t j = 0; j < nx; ++j) CHECK(hs[nb + j] == dom.members[j]);
        }
    }
}

TEST_CASE("genus 3 witness and controls") {
    auto l = SymplecticModule::standard(ScalarRing::prime_field(2), 3);
    auto c = orthogonal_cover(l, CoverMode::positive);
    REQUIRE(c.witness);
    CHECK(check_nerve_witness(c.family, *c.witness).passed());

    auto w = *c.witness;
    bool swapped = false;
    for (auto& e : w.e) {
        for (std::size_t i = 1; i < e.size() && !swapped; ++i)
            if (e[i] != e[0]) {
                std::swap(e[0], e[i]);
                swapped = true;
            }
        if (swapped) break;
    }
    REQUIRE(swapped);
    CHECK_FALSE(check_nerve_witness(c.family, w).passed());

    auto w2 = *c.witness;
    for (Index a = 0; a < c.family.index->size(); ++a)
        if (!w2.s[static_cast<std::size_t>(a)].empty()) {
            const Index b = c.family.index->below(a).front();
            const auto& mb = c.family.members[static_cast<std::size_t>(b)];
            Index outside = 0;
            while (mb[static_cast<std::size_t>(outside)]) ++outside;
            w2.s[static_cast<std::size_t>(a)].front() = outside;
            break;
        }
    CHECK_FALSE(check_nerve_witness(c.family, w2).passed());
}

TEST_CASE("emptied member is rejected") {
    auto l = SymplecticModule::standard(ScalarRing::prime_field(2), 2);
    auto c = orthogonal_cover(l, CoverMode::positive);
    auto broken = c.family;
    const Index a0 = broken.index->minimal_elements().front();
    auto clear = [&](Index a) {
        auto& m = broken.members[static_cast<std::size_t>(a)];
        std::fill(m.begin(), m.end(), false);
    };
    clear(a0);
    broken.index->for_each_above(a0, clear);
    CHECK(validate_cover(broken).valid());
    auto h = check_nerve_hypotheses(broken, 0);
    CHECK(h.status == VerdictStatus::refuted);
    bool member_row = false;
    for (const auto* row : h.failures()) member_row = member_row || row->kind == HypothesisRow::Kind::member;
    CHECK(member_row);
}
