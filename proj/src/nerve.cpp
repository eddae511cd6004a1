#include "cmposet/nerve.hpp"

#include <algorithm>

#include "cmposet/parallel.hpp"

namespace cmposet {

const char* to_string(CorollaryVariant v) { return v == CorollaryVariant::C ? "C" : "C_op"; }

const char* to_string(HypothesisRow::Kind k) {
    switch (k) {
        case HypothesisRow::Kind::index_link: return "A_<a";
        case HypothesisRow::Kind::member: return "X_a";
        case HypothesisRow::Kind::space_link: return "X_<x";
        case HypothesisRow::Kind::index_fiber: return "A_x";
    }
    return "X_a";
}

CorollaryReport check_corollary_conn(const PosetMap& f, const std::function<int(Index)>& t, int n,
                                     CorollaryVariant variant, const CheckOptions& opt, bool conclusion) {
    CorollaryReport report;
    report.variant = variant;
    report.n = n;
    const auto& y = f.target();
    report.rows.resize(static_cast<std::size_t>(y.size()));
    CheckOptions inner = opt;
    inner.workers = 1;
    parallel_for(report.rows.size(), opt.workers, [&](std::size_t i) {
        auto& row = report.rows[i];
        row.y = static_cast<Index>(i);
        row.t = t(row.y);
        if (variant == CorollaryVariant::C) {
            row.link_level = row.t - 2;
            row.fiber_level = n - row.t - 1;
            row.link = homology_connected(below(y, row.y), row.link_level, inner);
            row.fiber = homology_connected(fiber(f, row.y, FiberSide::over).poset, row.fiber_level, inner);
        } else {
            row.link_level = n - row.t - 2;
            row.fiber_level = row.t - 1;
            row.link = homology_connected(above(y, row.y), row.link_level, inner);
            row.fiber = homology_connected(fiber(f, row.y, FiberSide::under).poset, row.fiber_level, inner);
        }
    });
    report.hypotheses = VerdictStatus::verified;
    for (const auto& row : report.rows)
        report.hypotheses = combine(report.hypotheses, combine(row.link.status, row.fiber.status));
    if (conclusion) report.conclusion = map_connectivity(f, n, opt);
    return report;
}

std::vector<Index> CoverFamily::member_list(Index a) const {
    std::vector<Index> out;
    const auto& m = members[static_cast<std::size_t>(a)];
    for (std::size_t x = 0; x < m.size(); ++x)
        if (m[x]) out.push_back(static_cast<Index>(x));
    return out;
}

std::vector<Index> CoverFamily::containing(Index x) const {
    std::vector<Index> out;
    for (std::size_t a = 0; a < members.size(); ++a)
        if (members[a][static_cast<std::size_t>(x)]) out.push_back(static_cast<Index>(a));
    return out;
}

CoverReport validate_cover(const CoverFamily& family) {
    CoverReport report;
    const auto& a_poset = *family.index;
    const auto& x_poset = *family.space;
    if (static_cast<Index>(family.members.size()) != a_poset.size()) {
        report.violations.push_back("family has " + std::to_string(family.members.size()) + " members for " +
                                    std::to_string(a_poset.size()) + " indices");
        return report;
    }
    for (Index a = 0; a < a_poset.size(); ++a) {
        const auto& m = family.members[static_cast<std::size_t>(a)];
        if (static_cast<Index>(m.size()) != x_poset.size()) {
            report.violations.push_back("X_" + a_poset.label(a) + " has the wrong size");
            continue;
        }
        for (Index x = 0; x < x_poset.size(); ++x) {
            if (!m[static_cast<std::size_t>(x)]) continue;
            x_poset.for_each_below(x, [&](Index y) {
                if (!m[static_cast<std::size_t>(y)])
                    report.violations.push_back("X_" + a_poset.label(a) + " contains " + x_poset.label(x) +
                                                " but not " + x_poset.label(y));
            });
        }
    }
    if (!report.valid()) return report;
    for (Index a = 0; a < a_poset.size(); ++a)
        a_poset.for_each_above(a, [&](Index b) {
            const auto& ma = family.members[static_cast<std::size_t>(a)];
            const auto& mb = family.members[static_cast<std::size_t>(b)];
            for (Index x = 0; x < x_poset.size(); ++x)
                if (mb[static_cast<std::size_t>(x)] && !ma[static_cast<std::size_t>(x)])
                    report.violations.push_back(a_poset.label(a) + " < " + a_poset.label(b) + " but " +
                                                x_poset.label(x) + " lies in X_b and not in X_a");
        });
    return report;
}

ZPoset build_Z(const CoverFamily& family) {
    const auto check = validate_cover(family);
    if (!check.valid()) throw PosetError("invalid cover: " + check.violations.front());
    const auto& a_poset = *family.index;
    const auto& x_poset = *family.space;
    std::vector<std::pair<Index, Index>> pairs;
    std::vector<std::string> labels;
    for (Index a = 0; a < a_poset.size(); ++a)
        for (Index x : family.member_list(a)) {
            pairs.emplace_back(a, x);
            labels.push_back("(" + a_poset.label(a) + "," + x_poset.label(x) + ")");
        }
    std::vector<Relation> rel;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (i == j) continue;
            const auto [a, x] = pairs[i];
            const auto [b, y] = pairs[j];
            // order of A^op x X
            if (a_poset.leq(b, a) && x_poset.leq(x, y)) rel.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
        }
    auto z = std::make_shared<const FinitePoset>(FinitePoset::from_relations(labels, rel));
    auto z_op = std::make_shared<const FinitePoset>(opposite(*z));
    std::vector<Index> fa;
    std::vector<Index> gx;
    for (auto [a, x] : pairs) {
        fa.push_back(a);
        gx.push_back(x);
    }
    PosetMap f(z_op, family.index, std::move(fa));
    PosetMap g(z, family.space, std::move(gx));
    return ZPoset{std::move(z), std::move(z_op), std::move(pairs), std::move(f), std::move(g)};
}

std::vector<const HypothesisRow*> NerveHypothesisReport::failures() const {
    std::vector<const HypothesisRow*> out;
    for (const auto& r : rows)
        if (!r.verdict.verified()) out.push_back(&r);
    return out;
}

namespace {

HeightFunction default_height(const FinitePoset& p) {
    if (p.has_height()) return [&p](Index i) { return p.height(i); };
    auto h = std::make_shared<std::vector<int>>(p.standard_height());
    return [h](Index i) { return (*h)[static_cast<std::size_t>(i)]; };
}

}  // namespace

NerveHypothesisReport check_nerve_hypotheses(const CoverFamily& family, int n, HeightFunction t_x, HeightFunction t_a,
                                             const CheckOptions& opt) {
    const auto& a_poset = *family.index;
    const auto& x_poset = *family.space;
    if (!t_x) t_x = default_height(x_poset);
    if (!t_a) t_a = default_height(a_poset);
    NerveHypothesisReport report;
    report.n = n;
    using K = HypothesisRow::Kind;
    for (Index a = 0; a < a_poset.size(); ++a) {
        report.rows.push_back({K::index_link, a, t_a(a) - 2, {}});
        report.rows.push_back({K::member, a, n - t_a(a) - 1, {}});
    }
    for (Index x = 0; x < x_poset.size(); ++x) {
        report.rows.push_back({K::space_link, x, t_x(x) - 2, {}});
        report.rows.push_back({K::index_fiber, x, n - t_x(x) - 1, {}});
    }
    CheckOptions inner = opt;
    inner.workers = 1;
    parallel_for(report.rows.size(), opt.workers, [&](std::size_t i) {
        auto& row = report.rows[i];
        FinitePoset sub;
        switch (row.kind) {
            case K::index_link: sub = below(a_poset, row.element); break;
            case K::member: sub = x_poset.induced(family.member_list(row.element)); break;
            case K::space_link: sub = below(x_poset, row.element); break;
            case K::index_fiber: sub = a_poset.induced(family.containing(row.element)); break;
        }
        row.verdict = homology_connected(sub, row.level, inner);
    });
    report.status = VerdictStatus::verified;
    for (const auto& r : report.rows) report.status = combine(report.status, r.verdict.status);
    return report;
}

ZigZag concatenate(const ZigZag& a, const ZigZag& b) {
    if (a.maps.empty()) return b;
    if (b.maps.empty()) return a;
    if (a.maps.back() != b.maps.front()) throw std::invalid_argument("zig-zags do not meet");
    ZigZag out = a;
    out.maps.insert(out.maps.end(), b.maps.begin() + 1, b.maps.end());
    out.links.insert(out.links.end(), b.links.begin(), b.links.end());
    return out;
}

std::vector<std::string> check_zigzag(const FinitePoset& domain, const FinitePoset& target, const ZigZag& z,
                                      bool require_constant_end) {
    std::vector<std::string> out;
    if (z.maps.empty()) {
        out.push_back("empty zig-zag");
        return out;
    }
    if (z.links.size() + 1 != z.maps.size()) out.push_back("zig-zag has mismatched links");
    for (std::size_t i = 0; i < z.maps.size(); ++i)
        if (!is_monotone(domain, target, z.maps[i])) out.push_back("zig-zag map " + std::to_string(i) + " is not a poset map");
    if (!out.empty()) return out;
    for (std::size_t i = 0; i < z.links.size(); ++i) {
        const auto& p = z.maps[i];
        const auto& q = z.maps[i + 1];
        for (Index d = 0; d < domain.size(); ++d) {
            const Index u = p[static_cast<std::size_t>(d)];
            const Index v = q[static_cast<std::size_t>(d)];
            const bool ok = z.links[i] == Comparison::leq ? target.leq(u, v) : target.leq(v, u);
            if (!ok) {
                out.push_back("zig-zag link " + std::to_string(i) + " fails at " + domain.label(d));
                break;
            }
        }
    }
    if (require_constant_end && domain.size() > 0) {
        const auto& last = z.maps.back();
        if (std::any_of(last.begin(), last.end(), [&](Index v) { return v != last.front(); }))
            out.push_back("zig-zag does not end in a constant map");
    }
    return out;
}

WitnessDomain witness_domain(const CoverFamily& family, Index a) {
    WitnessDomain d;
    d.lower = family.index->below(a);
    d.members = family.member_list(a);
    d.poset = thick_join(opposite(family.index->induced(d.lower)), family.space->induced(d.members));
    return d;
}

std::vector<Index> hat_s(const CoverFamily& family, const NerveWitness& w, Index a) {
    const auto lower = family.index->below(a);
    const auto members = family.member_list(a);
    const auto nb = static_cast<Index>(lower.size());
    const auto nx = static_cast<Index>(members.size());
    const auto& s = w.s[static_cast<std::size_t>(a)];
    const auto& e = w.e[static_cast<std::size_t>(a)];
    std::vector<Index> out(static_cast<std::size_t>(nb + nx + nb * nx));
    for (Index b = 0; b < nb; ++b) out[static_cast<std::size_t>(b)] = s[static_cast<std::size_t>(b)];
    for (Index x = 0; x < nx; ++x) out[static_cast<std::size_t>(nb + x)] = members[static_cast<std::size_t>(x)];
    for (Index b = 0; b < nb; ++b)
        for (Index x = 0; x < nx; ++x)
            out[static_cast<std::size_t>(thick_join_pair(nb, nx, b, x))] = e[static_cast<std::size_t>(b * nx + x)];
    return out;
}

WitnessReport check_nerve_witness(const CoverFamily& family, const NerveWitness& w) {
    WitnessReport report;
    const auto& a_poset = *family.index;
    const auto& x_poset = *family.space;
    const auto na = static_cast<std::size_t>(a_poset.size());
    if (w.s.size() != na || w.e.size() != na || w.zigzag.size() != na) {
        report.violations.push_back("witness does not cover every index");
        return report;
    }
    for (Index a = 0; a < a_poset.size(); ++a) {
        const auto lower = a_poset.below(a);
        const auto members = family.member_list(a);
        const auto& s = w.s[static_cast<std::size_t>(a)];
        const auto& e = w.e[static_cast<std::size_t>(a)];
        const std::string at = " at " + a_poset.label(a);
        if (s.size() != lower.size() || e.size() != lower.size() * members.size()) {
            report.violations.push_back("witness has the wrong shape" + at);
            continue;
        }
        auto valid = [&](Index v) { return v >= 0 && v < x_poset.size(); };
        bool shape_ok = true;
        for (Index v : s) shape_ok = shape_ok && valid(v);
        for (Index v : e) shape_ok = shape_ok && valid(v);
        if (!shape_ok) {
            report.violations.push_back("witness value outside X" + at);
            continue;
        }
        const auto nx = members.size();
        for (std::size_t i = 0; i < lower.size(); ++i) {
            const Index b = lower[i];
            const auto& mb = family.members[static_cast<std::size_t>(b)];
            ++report.checked;
            if (!mb[static_cast<std::size_t>(s[i])])
                report.violations.push_back("s(" + a_poset.label(b) + ") not in X_b" + at);
            for (std::size_t j = 0; j < nx; ++j) {
                const Index x = members[j];
                const Index v = e[i * nx + j];
                ++report.checked;
                if (!mb[static_cast<std::size_t>(v)])
                    report.violations.push_back("e(" + a_poset.label(b) + "," + x_poset.label(x) + ") not in X_b" + at);
                if (!x_poset.leq(s[i], v))
                    report.violations.push_back("s(" + a_poset.label(b) + ") not below e(b," + x_poset.label(x) + ")" + at);
                if (!x_poset.leq(x, v))
                    report.violations.push_back(x_poset.label(x) + " not below e(" + a_poset.label(b) + ",x)" + at);
            }
        }
        const auto domain = witness_domain(family, a);
        const auto start = hat_s(family, w, a);
        if (!is_monotone(domain.poset, x_poset, start)) report.violations.push_back("s-hat is not a poset map" + at);
        const auto& z = w.zigzag[static_cast<std::size_t>(a)];
        if (z.maps.empty() || z.maps.front() != start) {
            report.violations.push_back("zig-zag does not start at s-hat" + at);
            continue;
        }
        for (auto& v : check_zigzag(domain.poset, x_poset, z)) report.violations.push_back(v + at);
    }
    return report;
}

namespace {

// Genus-1 members u_i of X with v_i in the image of u_i, u_i perpendicular to
// the other v_j and to each other; depth-first with backtracking.
std::optional<std::vector<Index>> choose_planes(const SymplecticModule& l, const SubmodulePoset& x,
                                                const Submodule& rad, const IntMatrix& lifts) {
    std::vector<Index> planes;
    for (Index i = 0; i < x.poset.size(); ++i)
        if (x.elements[static_cast<std::size_t>(i)].rank() == 2) planes.push_back(i);
    const auto k = static_cast<std::size_t>(lifts.rows());
    std::vector<Index> chosen;
    auto fits = [&](std::size_t i, Index p) {
        const auto& u = x.elements[static_cast<std::size_t>(p)];
        if (!sum(u, rad).contains(IntVector(lifts.row(static_cast<Eigen::Index>(i)).transpose()))) return false;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i && !l.pairing(u.basis(), lifts.row(static_cast<Eigen::Index>(j))).isZero()) return false;
        for (Index c : chosen)
            if (!l.pairing(u.basis(), x.elements[static_cast<std::size_t>(c)].basis()).isZero()) return false;
        return true;
    };
    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == k) return true;
        for (Index p : planes) {
            if (!fits(i, p)) continue;
            chosen.push_back(p);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return chosen;
}

// Positions in the longer sequence v of the rows missing from its
// subsequence b.
std::vector<int> complement_positions(const IntMatrix& v, const IntMatrix& b) {
    std::vector<int> out;
    Eigen::Index j = 0;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        if (j < b.rows() && v.row(i) == b.row(j)) ++j;
        else out.push_back(static_cast<int>(i));
    }
    return out;
}

NerveWitness build_witness(const SymplecticModule& l, const OrthogonalCover& c) {
    const auto& r = l.ring();
    const auto& a_poset = *c.family.index;
    const auto& x = c.space;
    const Submodule rad = radical(l);
    NerveWitness w;
    auto find = [&](const Submodule& s) {
        const Index i = x.find(s);
        if (i < 0) throw SymplecticError("witness value " + s.key() + " is not in X");
        return i;
    };
    for (Index a = 0; a < a_poset.size(); ++a) {
        const auto& lifts = c.lifts[static_cast<std::size_t>(a)];
        const auto planes = choose_planes(l, x, rad, lifts);
        if (!planes) throw SymplecticError("no perpendicular genus-1 lifts for " + a_poset.label(a));
        const auto lower = a_poset.below(a);
        const auto members = c.family.member_list(a);
        const auto& seq = c.index.sequences[static_cast<std::size_t>(a)];

        Submodule u_all = Submodule::zero(r, l.rank());
        for (Index p : *planes) u_all = sum(u_all, x.elements[static_cast<std::size_t>(p)]);
        const Index u_empty = find(u_all);

        std::vector<Index> s;
        std::vector<Index> e;
        for (Index b : lower) {
            Submodule ub = Submodule::zero(r, l.rank());
            for (int i : complement_positions(seq, c.index.sequences[static_cast<std::size_t>(b)]))
                ub = sum(ub, x.elements[static_cast<std::size_t>((*planes)[static_cast<std::size_t>(i)])]);
            s.push_back(find(ub));
            for (Index m : members) e.push_back(find(sum(x.elements[static_cast<std::size_t>(m)], ub)));
        }
        w.s.push_back(std::move(s));
        w.e.push_back(std::move(e));

        // ŝ <= ŝ + u_∅ >= u_∅
        const auto start = hat_s(c.family, w, a);
        std::vector<Index> middle;
        for (Index v : start) middle.push_back(find(sum(x.elements[static_cast<std::size_t>(v)], u_all)));
        ZigZag z;
        z.maps = {start, middle, std::vector<Index>(start.size(), u_empty)};
        z.links = {Comparison::leq, Comparison::geq};
        w.zigzag.push_back(std::move(z));
    }
    return w;
}

}  // namespace

OrthogonalCover orthogonal_cover(const SymplecticModule& l, CoverMode mode) {
    const auto& r = l.ring();
    if (!r.enumerable()) throw SymplecticError("the covering needs a finite field");
    OrthogonalCover c;
    c.genus = l.genus();
    const auto q = quotient_by_radical(l);
    c.index = build_I(q.module);

    const auto all = build_U(l);
    std::vector<Index> keep;
    std::vector<int> height;
    for (Index i = 0; i < all.poset.size(); ++i) {
        const int g = all.elements[static_cast<std::size_t>(i)].rank() / 2;
        if (g == 0 || (mode == CoverMode::interval && g == c.genus)) continue;
        keep.push_back(i);
        height.push_back(g - 1);
    }
    c.space.poset = all.poset.induced(keep).with_height(height);
    for (Index i : keep) c.space.elements.push_back(all.elements[static_cast<std::size_t>(i)]);

    for (const auto& seq : c.index.sequences) c.lifts.push_back(multiply(r, seq, q.lift));
    c.family.index = std::make_shared<const FinitePoset>(c.index.poset);
    c.family.space = std::make_shared<const FinitePoset>(c.space.poset);
    for (const auto& lift : c.lifts) {
        std::vector<bool> m;
        for (const auto& u : c.space.elements) m.push_back(l.pairing(u.basis(), lift).isZero());
        c.family.members.push_back(std::move(m));
    }
    if (mode == CoverMode::positive) c.witness = build_witness(l, c);
    return c;
}

}  // namespace cmposet
