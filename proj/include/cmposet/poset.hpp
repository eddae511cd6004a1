#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cmposet/bitmatrix.hpp"

namespace cmposet {

using Index = std::int32_t;
using Relation = std::pair<Index, Index>;  // first < second

class PosetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A chain/simplex enumeration went over its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite partially ordered set.
///
/// Elements are indexed 0..size()-1 and carry unique string labels. The
/// strict order is stored transitively closed in both directions (up and down
/// bit rows). An optional integer height function must be strictly increasing
/// along the order. Instances are immutable once built.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Builds the poset generated by `less` (pairs a<b). The transitive closure
    /// is computed; cycles, self-relations, duplicate labels and non-increasing
    /// heights are rejected with PosetError.
    static FinitePoset from_relations(std::vector<std::string> labels, std::span<const Relation> less,
                                      std::optional<std::vector<int>> height = std::nullopt);

    static FinitePoset antichain(std::vector<std::string> labels);
    static FinitePoset chain(std::vector<std::string> labels);

    Index size() const { return static_cast<Index>(labels_.size()); }
    bool empty() const { return labels_.empty(); }

    const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Index> find(const std::string& label) const;

    bool less(Index a, Index b) const { return up_.test(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); }
    bool leq(Index a, Index b) const { return a == b || less(a, b); }
    bool comparable(Index a, Index b) const { return leq(a, b) || less(b, a); }

    const BitMatrix& up() const { return up_; }
    const BitMatrix& down() const { return down_; }

    std::vector<Index> above(Index x) const;
    std::vector<Index> below(Index x) const;

    template <typename F>
    void for_each_above(Index x, F&& fn) const {
        up_.for_each_in_row(static_cast<std::size_t>(x), [&](std::size_t j) { fn(static_cast<Index>(j)); });
    }
    template <typename F>
    void for_each_below(Index x, F&& fn) const {
        down_.for_each_in_row(static_cast<std::size_t>(x), [&](std::size_t j) { fn(static_cast<Index>(j)); });
    }

    std::size_t relation_count() const;

    bool has_height() const { return height_.has_value(); }
    int height(Index i) const { return height_->at(static_cast<std::size_t>(i)); }
    const std::optional<std::vector<int>>& heights() const { return height_; }

    /// dim X_{<=x}: length of the longest chain ending at x.
    std::vector<int> standard_height() const;
    FinitePoset with_height(std::vector<int> height) const;
    FinitePoset with_standard_height() const { return with_height(standard_height()); }
    FinitePoset without_height() const;

    /// Length of the longest chain (number of elements minus one); -1 when empty.
    int dimension() const;

    /// Elements in an order compatible with the partial order.
    std::vector<Index> linear_extension() const;

    std::vector<Relation> hasse_edges() const;
    std::vector<Index> minimal_elements() const;
    std::vector<Index> maximal_elements() const;

    /// Full induced subposet on `elements`, which are kept in the given order.
    FinitePoset induced(std::span<const Index> elements) const;
    FinitePoset induced(const std::vector<bool>& mask) const;

    /// Same underlying set, same relations, same heights.
    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        return a.labels_ == b.labels_ && a.up_ == b.up_ && a.height_ == b.height_;
    }

private:
    std::vector<std::string> labels_;
    BitMatrix up_;    // up_(i, j) <=> i < j
    BitMatrix down_;  // down_(i, j) <=> j < i
    std::optional<std::vector<int>> height_;
    std::shared_ptr<const std::unordered_map<std::string, Index>> index_;

    void check_height() const;
    void build_index();
};

/// Order-preserving map between finite posets. Construction rejects
/// assignments that are not monotone.
class PosetMap {
public:
    PosetMap(std::shared_ptr<const FinitePoset> source, std::shared_ptr<const FinitePoset> target,
             std::vector<Index> assignment);
    PosetMap(FinitePoset source, FinitePoset target, std::vector<Index> assignment);

    const FinitePoset& source() const { return *source_; }
    const FinitePoset& target() const { return *target_; }
    const std::shared_ptr<const FinitePoset>& source_ptr() const { return source_; }
    const std::shared_ptr<const FinitePoset>& target_ptr() const { return target_; }

    Index operator()(Index x) const { return assignment_[static_cast<std::size_t>(x)]; }
    const std::vector<Index>& assignment() const { return assignment_; }

    /// The same set map regarded as X^op -> Y^op.
    PosetMap opposite() const;

private:
    std::shared_ptr<const FinitePoset> source_;
    std::shared_ptr<const FinitePoset> target_;
    std::vector<Index> assignment_;
};

bool is_monotone(const FinitePoset& source, const FinitePoset& target, std::span<const Index> assignment);

}  // namespace cmposet
