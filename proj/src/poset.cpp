#include "cmposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cmposet/poset_ops.hpp"

namespace cmposet {

namespace {

std::vector<Index> topological_order(Index n, const std::vector<std::vector<Index>>& succ) {
    std::vector<Index> indegree(static_cast<std::size_t>(n), 0);
    for (const auto& s : succ)
        for (Index b : s) ++indegree[static_cast<std::size_t>(b)];
    std::vector<Index> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        if (indegree[static_cast<std::size_t>(i)] == 0) order.push_back(i);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Index b : succ[static_cast<std::size_t>(order[head])])
            if (--indegree[static_cast<std::size_t>(b)] == 0) order.push_back(b);
    }
    if (static_cast<Index>(order.size()) != n) throw PosetError("order relation contains a cycle");
    return order;
}

}  // namespace

FinitePoset FinitePoset::from_relations(std::vector<std::string> labels, std::span<const Relation> less,
                                        std::optional<std::vector<int>> height) {
    FinitePoset p;
    const auto n = static_cast<Index>(labels.size());
    p.labels_ = std::move(labels);
    p.height_ = std::move(height);
    if (p.height_ && static_cast<Index>(p.height_->size()) != n)
        throw PosetError("height function has wrong length");

    std::vector<std::vector<Index>> succ(static_cast<std::size_t>(n));
    for (auto [a, b] : less) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw PosetError("relation index out of range");
        if (a == b) throw PosetError("strict order must be irreflexive: " + p.labels_[static_cast<std::size_t>(a)]);
        succ[static_cast<std::size_t>(a)].push_back(b);
    }
    const auto order = topological_order(n, succ);

    p.up_ = BitMatrix(static_cast<std::size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto x = static_cast<std::size_t>(*it);
        for (Index b : succ[x]) {
            p.up_.set(x, static_cast<std::size_t>(b));
            p.up_.or_row(x, static_cast<std::size_t>(b));
        }
    }
    p.down_ = p.up_.transposed();
    p.build_index();
    p.check_height();
    return p;
}

FinitePoset FinitePoset::antichain(std::vector<std::string> labels) { return from_relations(std::move(labels), {}); }

FinitePoset FinitePoset::chain(std::vector<std::string> labels) {
    std::vector<Relation> rel;
    for (Index i = 0; i + 1 < static_cast<Index>(labels.size()); ++i) rel.emplace_back(i, i + 1);
    return from_relations(std::move(labels), rel);
}

void FinitePoset::build_index() {
    auto map = std::make_shared<std::unordered_map<std::string, Index>>();
    map->reserve(labels_.size());
    for (Index i = 0; i < size(); ++i) {
        if (!map->emplace(labels_[static_cast<std::size_t>(i)], i).second)
            throw PosetError("duplicate element label: " + labels_[static_cast<std::size_t>(i)]);
    }
    index_ = std::move(map);
}

void FinitePoset::check_height() const {
    if (!height_) return;
    for (Index i = 0; i < size(); ++i) {
        for_each_above(i, [&](Index j) {
            if (height(i) >= height(j))
                throw PosetError("height is not strictly increasing on " + label(i) + " < " + label(j));
        });
    }
}

std::optional<Index> FinitePoset::find(const std::string& label) const {
    if (!index_) return std::nullopt;
    auto it = index_->find(label);
    if (it == index_->end()) return std::nullopt;
    return it->second;
}

std::vector<Index> FinitePoset::above(Index x) const {
    std::vector<Index> out;
    for_each_above(x, [&](Index j) { out.push_back(j); });
    return out;
}

std::vector<Index> FinitePoset::below(Index x) const {
    std::vector<Index> out;
    for_each_below(x, [&](Index j) { out.push_back(j); });
    return out;
}

std::size_t FinitePoset::relation_count() const {
    std::size_t c = 0;
    for (Index i = 0; i < size(); ++i) c += up_.row_count(static_cast<std::size_t>(i));
    return c;
}

std::vector<Index> FinitePoset::linear_extension() const {
    std::vector<Index> order(static_cast<std::size_t>(size()));
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below_count(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) below_count[i] = down_.row_count(i);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return below_count[static_cast<std::size_t>(a)] < below_count[static_cast<std::size_t>(b)];
    });
    return order;
}

std::vector<int> FinitePoset::standard_height() const {
    std::vector<int> h(static_cast<std::size_t>(size()), 0);
    for (Index x : linear_extension()) {
        int best = 0;
        for_each_below(x, [&](Index y) { best = std::max(best, h[static_cast<std::size_t>(y)] + 1); });
        h[static_cast<std::size_t>(x)] = best;
    }
    return h;
}

FinitePoset FinitePoset::with_height(std::vector<int> height) const {
    if (static_cast<Index>(height.size()) != size()) throw PosetError("height function has wrong length");
    FinitePoset p = *this;
    p.height_ = std::move(height);
    p.check_height();
    return p;
}

FinitePoset FinitePoset::without_height() const {
    FinitePoset p = *this;
    p.height_.reset();
    return p;
}

int FinitePoset::dimension() const {
    if (empty()) return -1;
    const auto h = standard_height();
    return *std::max_element(h.begin(), h.end());
}

std::vector<Relation> FinitePoset::hasse_edges() const {
    std::vector<Relation> edges;
    for (Index x = 0; x < size(); ++x) {
        for_each_above(x, [&](Index y) {
            // y covers x iff nothing lies strictly between them
            if (!up_.rows_intersect(static_cast<std::size_t>(x), down_, static_cast<std::size_t>(y)))
                edges.emplace_back(x, y);
        });
    }
    return edges;
}

std::vector<Index> FinitePoset::minimal_elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
        if (down_.row_count(static_cast<std::size_t>(i)) == 0) out.push_back(i);
    return out;
}

std::vector<Index> FinitePoset::maximal_elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
        if (up_.row_count(static_cast<std::size_t>(i)) == 0) out.push_back(i);
    return out;
}

FinitePoset FinitePoset::induced(std::span<const Index> elements) const {
    std::vector<Index> position(static_cast<std::size_t>(size()), -1);
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) {
        const auto e = static_cast<std::size_t>(elements[k]);
        if (position[e] >= 0) throw PosetError("induced subposet lists an element twice");
        position[e] = static_cast<Index>(k);
        labels.push_back(labels_[e]);
    }
    std::vector<Relation> rel;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for_each_above(elements[k], [&](Index j) {
            const Index pj = position[static_cast<std::size_t>(j)];
            if (pj >= 0) rel.emplace_back(static_cast<Index>(k), pj);
        });
    }
    std::optional<std::vector<int>> h;
    if (height_) {
        h.emplace();
        for (Index e : elements) h->push_back(height(e));
    }
    return from_relations(std::move(labels), rel, std::move(h));
}

FinitePoset FinitePoset::induced(const std::vector<bool>& mask) const {
    std::vector<Index> elems;
    for (Index i = 0; i < size(); ++i)
        if (mask[static_cast<std::size_t>(i)]) elems.push_back(i);
    return induced(elems);
}

bool is_monotone(const FinitePoset& source, const FinitePoset& target, std::span<const Index> assignment) {
    if (static_cast<Index>(assignment.size()) != source.size()) return false;
    for (Index v : assignment)
        if (v < 0 || v >= target.size()) return false;
    for (Index x = 0; x < source.size(); ++x) {
        bool ok = true;
        source.for_each_above(x, [&](Index y) {
            if (!target.leq(assignment[static_cast<std::size_t>(x)], assignment[static_cast<std::size_t>(y)]))
                ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

PosetMap::PosetMap(std::shared_ptr<const FinitePoset> source, std::shared_ptr<const FinitePoset> target,
                   std::vector<Index> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
    if (!is_monotone(*source_, *target_, assignment_)) throw PosetError("poset map is not monotone");
}

PosetMap::PosetMap(FinitePoset source, FinitePoset target, std::vector<Index> assignment)
    : PosetMap(std::make_shared<const FinitePoset>(std::move(source)),
               std::make_shared<const FinitePoset>(std::move(target)), std::move(assignment)) {}

PosetMap PosetMap::opposite() const {
    return PosetMap(cmposet::opposite(*source_), cmposet::opposite(*target_), assignment_);
}

}  // namespace cmposet
