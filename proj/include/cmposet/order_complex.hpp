#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cmposet/poset.hpp"
#include "cmposet/smith.hpp"

namespace cmposet {

inline constexpr std::size_t default_chain_budget = 5'000'000;

/// Chains of a poset as simplices. A k-simplex is stored as its k+1 vertices
/// in increasing order; simplices of each dimension are sorted
/// lexicographically so faces can be found by binary search.
class OrderComplex {
public:
    /// Enumerates chains up to `max_dim` (all of them by default). Throws
    /// BudgetExceeded when more than `budget` chains would be produced.
    explicit OrderComplex(const FinitePoset& p, int max_dim = std::numeric_limits<int>::max(),
                          std::size_t budget = default_chain_budget);

    Index vertex_count() const { return vertices_; }
    /// Dimension of the enumerated part; -1 for the empty complex.
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    /// True when enumeration stopped at max_dim while longer chains exist.
    bool truncated() const { return truncated_; }

    std::size_t count(int k) const;
    std::vector<std::size_t> counts() const;
    std::size_t total() const;

    std::span<const Index> simplex(int k, std::size_t i) const {
        return {simplices_[static_cast<std::size_t>(k)].data() + i * static_cast<std::size_t>(k + 1),
                static_cast<std::size_t>(k + 1)};
    }
    /// Position of a chain among the simplices of its dimension.
    std::optional<std::size_t> find(std::span<const Index> chain) const;

    /// ∂_k : C_k -> C_{k-1}. ∂_0 is the augmentation onto one row when
    /// `augmented`, otherwise a 0 x n matrix.
    SparseIntMatrix boundary(int k, bool augmented = true) const;

    /// Boundary of the quotient C(K)/C(L) where L is the full subcomplex on
    /// the vertices marked in `sub`. Relative k-chains are indexed by
    /// relative_cells(k, sub).
    SparseIntMatrix relative_boundary(int k, const std::vector<bool>& sub) const;
    std::vector<std::size_t> relative_cells(int k, const std::vector<bool>& sub) const;

private:
    Index vertices_ = 0;
    bool truncated_ = false;
    std::vector<std::vector<Index>> simplices_;
};

/// Product of two sparse matrices (used for the ∂∘∂ assertion).
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace cmposet
