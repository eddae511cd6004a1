#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmposet/poset_ops.hpp"

namespace cmposet {

/// A set partition of {0, ..., m-1}: block[i] is the block of i, blocks
/// numbered by first occurrence (restricted growth string).
using SetPartition = std::vector<int>;

int block_count(const SetPartition& p);
std::string partition_text(const SetPartition& p);  ///< e.g. "{0 1|2}"
/// Every block of `fine` lies inside a block of `coarse`.
bool partition_refines(const SetPartition& fine, const SetPartition& coarse);
std::vector<SetPartition> all_set_partitions(int m);

struct PartitionPoset {
    FinitePoset poset;
    std::vector<SetPartition> partitions;

    Index find(const SetPartition& p) const;  ///< -1 when absent
};

/// Set partitions of an m-element set ordered by refinement (finer is
/// larger), height = blocks - 1. The defaults give D_+(X); throws for m < 2.
PartitionPoset partitions_poset(int m, bool include_trivial = false, bool include_discrete = true);

struct GPlusMap {
    FinitePoset proper_subsets;  ///< F(X): proper nonempty subsets, labels are bitmasks
    std::vector<std::uint32_t> subsets;
    ChainPoset nested;           ///< F(X)'
    std::shared_ptr<const PartitionPoset> target;
    PosetMap map;                ///< X_0 < ... < X_h  ->  {X_0, X_1 - X_0, ..., X - X_h}
};

GPlusMap g_plus_map(int m);

/// D(Y_0) x ... x D(Y_h) minus its minimum, for the block sizes of y. It is
/// isomorphic to D_+(X)_{>y}.
FinitePoset partition_product_upper(const SetPartition& y);

}  // namespace cmposet
