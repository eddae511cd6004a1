#pragma once

#include <memory>
#include <vector>

#include "cmposet/lattice_posets.hpp"

namespace cmposet {

/// HU_g: sequences of pairs (v_i, v_-i) with <v_i, v_-i> = 1 and all other
/// pairings zero. A sequence of k pairs is stored as 2k rows
/// v_1, v_-1, ..., v_k, v_-k.
bool is_split_unimodular(const SymplecticModule& l, const IntMatrix& pairs);

/// a is a subsequence of b, pair by pair.
bool hu_leq(const IntMatrix& a, const IntMatrix& b);

/// HU_g(F_p) on standard(g), ordered by subsequence of pairs, height k - 1.
SequencePoset build_HU(int g, const ScalarRing& ring);

/// The genus-1 summands of a split sequence plus the perp of their sum,
/// which is left out when it is zero.
Decomposition hu_decomposition(const SymplecticModule& l, const IntMatrix& pairs);

struct HUDecompositionMap {
    SymplecticModule module;
    SequencePoset source;
    std::shared_ptr<const DecompositionPoset> target;  ///< D_+(R^{2g})
    PosetMap map;
};

/// f: HU_g -> D_+(R^{2g}); needs g >= 2.
HUDecompositionMap hu_decomposition_map(int g, const ScalarRing& ring);

/// t(u): members of genus 1; s(u): members of higher genus.
int genus_one_count(const Decomposition& u);
int higher_genus_count(const Decomposition& u);

/// Nonempty sequences of distinct elements of A = {0..|A|-1} meeting every
/// part at most once; part_of[a] is the part of a. Ordered by subsequence.
FinitePoset partition_sequences_poset(const std::vector<int>& part_of);

/// part_of for parts of the given sizes, laid out consecutively.
std::vector<int> parts_from_sizes(const std::vector<int>& sizes);

/// floor((g - 3) / 2).
int hu_connectivity_bound(int g);

}  // namespace cmposet
