#include "cmposet/poset_ops.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace cmposet {

std::vector<std::string> disjoint_labels(std::initializer_list<const std::vector<std::string>*> pieces) {
    std::unordered_set<std::string> seen;
    bool collision = false;
    for (const auto* piece : pieces)
        for (const auto& l : *piece)
            if (!seen.insert(l).second) collision = true;
    std::vector<std::string> out;
    int tag = 0;
    for (const auto* piece : pieces) {
        for (const auto& l : *piece) out.push_back(collision ? std::to_string(tag) + ":" + l : l);
        ++tag;
    }
    return out;
}

namespace {

void append_relations(const FinitePoset& p, Index offset, std::vector<Relation>& rel) {
    for (Index a = 0; a < p.size(); ++a) p.for_each_above(a, [&](Index b) { rel.emplace_back(a + offset, b + offset); });
}

}  // namespace

FinitePoset opposite(const FinitePoset& p) {
    std::vector<Relation> rel;
    for (Index a = 0; a < p.size(); ++a) p.for_each_above(a, [&](Index b) { rel.emplace_back(b, a); });
    std::optional<std::vector<int>> h;
    if (p.has_height()) {
        h = *p.heights();
        for (auto& v : *h) v = -v;
    }
    return FinitePoset::from_relations(p.labels(), rel, std::move(h));
}

FinitePoset join(const FinitePoset& x, const FinitePoset& y) {
    auto labels = disjoint_labels({&x.labels(), &y.labels()});
    std::vector<Relation> rel;
    append_relations(x, 0, rel);
    append_relations(y, x.size(), rel);
    for (Index a = 0; a < x.size(); ++a)
        for (Index b = 0; b < y.size(); ++b) rel.emplace_back(a, x.size() + b);

    std::optional<std::vector<int>> h;
    if (x.has_height() && y.has_height()) {
        h.emplace();
        int top = 0;
        for (Index a = 0; a < x.size(); ++a) {
            h->push_back(x.height(a));
            top = std::max(top, x.height(a));
        }
        int bottom = 0;
        for (Index b = 0; b < y.size(); ++b) bottom = std::min(bottom, y.height(b));
        const int shift = x.empty() ? 0 : top - bottom + 1;
        for (Index b = 0; b < y.size(); ++b) h->push_back(y.height(b) + shift);
    }
    return FinitePoset::from_relations(std::move(labels), rel, std::move(h));
}

FinitePoset thick_join(const FinitePoset& x, const FinitePoset& y) {
    std::vector<std::string> pairs;
    for (Index a = 0; a < x.size(); ++a)
        for (Index b = 0; b < y.size(); ++b) pairs.push_back("(" + x.label(a) + "," + y.label(b) + ")");
    auto labels = disjoint_labels({&x.labels(), &y.labels(), &pairs});

    const Index nx = x.size();
    const Index ny = y.size();
    std::vector<Relation> rel;
    append_relations(x, 0, rel);
    append_relations(y, nx, rel);
    for (Index a = 0; a < nx; ++a) {
        for (Index b = 0; b < ny; ++b) {
            const Index ab = thick_join_pair(nx, ny, a, b);
            rel.emplace_back(a, ab);
            rel.emplace_back(nx + b, ab);
            // product order, generated by moving one coordinate at a time
            x.for_each_above(a, [&](Index a2) { rel.emplace_back(ab, thick_join_pair(nx, ny, a2, b)); });
            y.for_each_above(b, [&](Index b2) { rel.emplace_back(ab, thick_join_pair(nx, ny, a, b2)); });
        }
    }
    return FinitePoset::from_relations(std::move(labels), rel);
}

PosetMap collapse_map(const FinitePoset& x, const FinitePoset& y) {
    const Index nx = x.size();
    const Index ny = y.size();
    std::vector<Index> assignment;
    for (Index a = 0; a < nx; ++a) assignment.push_back(a);
    for (Index b = 0; b < ny; ++b) assignment.push_back(nx + b);
    for (Index a = 0; a < nx; ++a)
        for (Index b = 0; b < ny; ++b) assignment.push_back(nx + b);
    return PosetMap(thick_join(x, y), join(x, y), std::move(assignment));
}

Cylinder mapping_cylinder(const PosetMap& f, CylinderMode mode, int k) {
    const auto& x = f.source();
    const auto& y = f.target();
    if (mode == CylinderMode::truncated && !y.has_height())
        throw PosetError("truncated mapping cylinder needs a height function on the target");

    const Index nx = x.size();
    const Index ny = y.size();
    std::vector<std::string> cone_label;
    if (mode == CylinderMode::cone) cone_label.push_back("*");
    auto labels = disjoint_labels({&x.labels(), &y.labels(), &cone_label});

    std::vector<Relation> rel;
    append_relations(x, 0, rel);
    append_relations(y, nx, rel);
    for (Index a = 0; a < nx; ++a) rel.emplace_back(nx + f(a), a);
    if (mode == CylinderMode::cone)
        for (Index a = 0; a < nx; ++a) rel.emplace_back(nx + ny, a);

    Cylinder c;
    c.source_count = nx;
    c.poset = FinitePoset::from_relations(std::move(labels), rel);
    c.target_position.resize(static_cast<std::size_t>(ny));
    for (Index b = 0; b < ny; ++b) c.target_position[static_cast<std::size_t>(b)] = nx + b;
    if (mode == CylinderMode::cone) c.cone_vertex = nx + ny;

    if (mode == CylinderMode::truncated) {
        std::vector<Index> keep;
        for (Index a = 0; a < nx; ++a) keep.push_back(a);
        for (Index b = 0; b < ny; ++b) {
            if (y.height(b) <= k) {
                c.target_position[static_cast<std::size_t>(b)] = static_cast<Index>(keep.size());
                keep.push_back(nx + b);
            } else {
                c.target_position[static_cast<std::size_t>(b)] = -1;
            }
        }
        c.poset = c.poset.induced(keep);
    }
    return c;
}

Cylinder dual_cylinder(const PosetMap& f) {
    Cylinder c = mapping_cylinder(f.opposite());
    c.poset = opposite(c.poset);
    return c;
}

Fiber fiber(const PosetMap& f, Index y, FiberSide side) {
    Fiber out;
    for (Index a = 0; a < f.source().size(); ++a) {
        const bool in = side == FiberSide::under ? f.target().leq(f(a), y) : f.target().leq(y, f(a));
        if (in) out.elements.push_back(a);
    }
    out.poset = f.source().induced(out.elements);
    return out;
}

FinitePoset below(const FinitePoset& p, Index x) { return p.induced(p.below(x)); }
FinitePoset above(const FinitePoset& p, Index x) { return p.induced(p.above(x)); }

FinitePoset open_interval(const FinitePoset& p, Index x, Index y) {
    if (!p.less(x, y)) throw PosetError("open interval needs " + p.label(x) + " < " + p.label(y));
    std::vector<Index> elems;
    p.for_each_above(x, [&](Index z) {
        if (p.less(z, y)) elems.push_back(z);
    });
    return p.induced(elems);
}

ChainPoset barycentric_subdivision_chains(const FinitePoset& p, std::size_t budget) {
    ChainPoset out;
    std::map<std::vector<Index>, Index> index;
    std::vector<Index> current;
    // depth-first enumeration of chains, each extended only upward
    auto visit = [&](auto&& self, Index last) -> void {
        p.for_each_above(last, [&](Index next) {
            current.push_back(next);
            index.emplace(current, static_cast<Index>(out.chains.size()));
            out.chains.push_back(current);
            if (out.chains.size() > budget) throw BudgetExceeded("barycentric subdivision over chain budget");
            self(self, next);
            current.pop_back();
        });
    };
    for (Index x = 0; x < p.size(); ++x) {
        current = {x};
        index.emplace(current, static_cast<Index>(out.chains.size()));
        out.chains.push_back(current);
        if (out.chains.size() > budget) throw BudgetExceeded("barycentric subdivision over chain budget");
        visit(visit, x);
    }

    std::vector<std::string> labels;
    std::vector<int> height;
    std::vector<Relation> rel;
    for (std::size_t c = 0; c < out.chains.size(); ++c) {
        const auto& chain = out.chains[c];
        std::string l = "{";
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i > 0) l += "<";
            l += p.label(chain[i]);
        }
        labels.push_back(l + "}");
        height.push_back(static_cast<int>(chain.size()) - 1);
        if (chain.size() < 2) continue;
        for (std::size_t drop = 0; drop < chain.size(); ++drop) {
            std::vector<Index> face;
            for (std::size_t i = 0; i < chain.size(); ++i)
                if (i != drop) face.push_back(chain[i]);
            rel.emplace_back(index.at(face), static_cast<Index>(c));
        }
    }
    out.poset = FinitePoset::from_relations(std::move(labels), rel, std::move(height));
    return out;
}

bool order_matches(const FinitePoset& p, std::span<const Index> elements, const FinitePoset& q) {
    if (static_cast<Index>(elements.size()) != q.size()) return false;
    for (Index a = 0; a < q.size(); ++a)
        for (Index b = 0; b < q.size(); ++b)
            if (q.less(a, b) != p.less(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

bool cylinder_link_check(const PosetMap& f, Index y) {
    const auto& target = f.target();
    if (!target.has_height()) throw PosetError("cylinder link check needs a height function on the target");
    const int k = target.height(y);

    // M(f, <= k-1) together with y, as an induced subposet of M(f)
    const Cylinder full = mapping_cylinder(f);
    std::vector<Index> keep;
    for (Index a = 0; a < full.source_count; ++a) keep.push_back(a);
    for (Index b = 0; b < target.size(); ++b)
        if (b == y || target.height(b) <= k - 1) keep.push_back(full.target_position[static_cast<std::size_t>(b)]);
    const Index y_in_m = full.target_position[static_cast<std::size_t>(y)];

    std::vector<Index> lower;
    std::vector<Index> upper;
    for (Index m : keep) {
        if (full.poset.less(m, y_in_m)) lower.push_back(m);
        if (full.poset.less(y_in_m, m)) upper.push_back(m);
    }

    // expected pieces, built independently
    std::vector<Index> y_below = target.below(y);
    const Fiber over = fiber(f, y, FiberSide::over);
    std::vector<Index> expected_lower;
    for (Index b : y_below) expected_lower.push_back(full.target_position[static_cast<std::size_t>(b)]);
    if (lower != expected_lower || upper != over.elements) return false;

    const FinitePoset expected = join(target.induced(y_below), over.poset);
    std::vector<Index> link = lower;
    link.insert(link.end(), upper.begin(), upper.end());
    return order_matches(full.poset, link, expected);
}

std::optional<std::vector<Index>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
    const Index n = p.size();
    if (n != q.size() || p.relation_count() != q.relation_count()) return std::nullopt;
    auto signature = [](const FinitePoset& s, Index x) {
        return std::pair{s.down().row_count(static_cast<std::size_t>(x)), s.up().row_count(static_cast<std::size_t>(x))};
    };
    std::vector<Index> order = p.linear_extension();
    std::vector<Index> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    auto extend = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        const Index a = order[pos];
        for (Index b = 0; b < n; ++b) {
            if (used[static_cast<std::size_t>(b)] || signature(p, a) != signature(q, b)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < pos && ok; ++i) {
                const Index a2 = order[i];
                const Index b2 = image[static_cast<std::size_t>(a2)];
                ok = p.less(a2, a) == q.less(b2, b) && p.less(a, a2) == q.less(b, b2);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(a)] = b;
            used[static_cast<std::size_t>(b)] = true;
            if (self(self, pos + 1)) return true;
            used[static_cast<std::size_t>(b)] = false;
        }
        image[static_cast<std::size_t>(a)] = -1;
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    return image;
}

}  // namespace cmposet
