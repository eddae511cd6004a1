#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmposet/lattice_posets.hpp"

namespace cmposet {

/// A tree with a labeling i: {0..m-1} -> vertices whose image contains every
/// vertex of degree <= 2.
struct UTree {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  ///< each with first < second
    std::vector<int> position;               ///< label -> vertex

    int label_count() const { return static_cast<int>(position.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool strict() const;
    std::vector<int> degrees() const;
    /// T_00: the vertices of degree <= 2.
    std::vector<int> low_degree_vertices() const;
    /// Complete invariant of the labeled tree up to isomorphisms that fix the
    /// labeling.
    std::string canonical() const;
};

/// Why `t` is not a u-tree, or nullopt.
std::optional<std::string> utree_violation(const UTree& t);

/// T^E: contracts every component of T - E. `kept` lists edge indices of E;
/// throws std::invalid_argument when it is empty.
UTree contract(const UTree& t, const std::vector<int>& kept);

/// False exactly when T^E and T^E' are isomorphic compatibly with the
/// labeling while E != E'.
bool contraction_unique(const UTree& t, const std::vector<int>& e, const std::vector<int>& e_prime);

/// All u-trees on m >= 2 labels up to isomorphism, ordered by edge count then
/// canonical form. `strict` keeps the injective labelings only.
std::vector<UTree> enumerate_trees(int m, bool strict);

/// Every tree with 1..max_edges edges up to isomorphism, each labeled by its
/// own T_00 (labels in increasing vertex order).
std::vector<UTree> trees_up_to(int max_edges);

/// Only the identity fixes the labeling.
bool is_rigid(const UTree& t);

struct TreePoset {
    FinitePoset poset;
    std::vector<UTree> trees;
};

/// T(u) for |u| = m, ordered by contraction, height |T_1| - 1.
TreePoset build_T(int m);

struct TreeDecompositionPoset {
    FinitePoset poset;
    std::vector<Index> decomposition;  ///< element -> index in dplus
    std::vector<UTree> trees;          ///< labels index the members of the decomposition
    std::shared_ptr<const DecompositionPoset> dplus;
};

/// TD(L): strict u-trees over the strict decompositions of L.
TreeDecompositionPoset build_TD(const SymplecticModule& l);

/// p: TD(L) -> D_+(L), forgetting the tree.
PosetMap tree_forget_map(const TreeDecompositionPoset& td);

}  // namespace cmposet
