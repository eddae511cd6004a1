#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmposet/poset_ops.hpp"
#include "cmposet/sequences.hpp"
#include "cmposet/symplectic.hpp"

namespace cmposet {

/// A poset whose elements are submodules of a fixed L, in canonical order.
struct SubmodulePoset {
    FinitePoset poset;
    std::vector<Submodule> elements;

    Index find(const Submodule& s) const;  ///< -1 when absent
};

/// U(L): all unimodular submodules (0 included) ordered by inclusion, with
/// the genus as height. Finite fields only.
SubmodulePoset build_U(const SymplecticModule& l, unsigned workers = 1);

/// U(s) for a submodule s of L with the induced form, in L coordinates.
SubmodulePoset build_U_within(const SymplecticModule& l, const Submodule& s, unsigned workers = 1);

/// I(L): isotropic sequences whose image in L/L_o is linearly independent,
/// ordered as subsequences, height |v| - 1. Finite fields only.
SequencePoset build_I(const SymplecticModule& l);

/// A unimodular decomposition: its members in canonical order.
using Decomposition = std::vector<Submodule>;

std::string decomposition_key(const Decomposition& d);
Decomposition make_decomposition(std::vector<Submodule> members);
/// Members pairwise orthogonal, unimodular of positive genus, summing to L.
bool is_decomposition(const SymplecticModule& l, const Decomposition& d);
/// Every member of `fine` lies in a member of `coarse`.
bool refines(const Decomposition& fine, const Decomposition& coarse);

struct DecompositionPoset {
    FinitePoset poset;
    std::vector<Decomposition> elements;

    Index find(const Decomposition& d) const;  ///< -1 when absent
};

/// D(L) ordered by refinement (finer is larger), height |u| - 1. With
/// `strict`, the minimum (L) is left out, giving D_+(L). L must be
/// unimodular of positive genus over a finite field.
DecompositionPoset build_D(const SymplecticModule& l, bool strict);

/// The decomposition attached to a chain 0 != u_0 < ... < u_k of unimodular
/// submodules: u_0, u_i ∩ u_{i-1}^⊥, and u_k^⊥ unless u_k = L.
Decomposition flag_decomposition(const SymplecticModule& l, const std::vector<Submodule>& chain);

struct FlagMap {
    SubmodulePoset positive;  ///< U(L)_{>0}
    ChainPoset chains;        ///< its barycentric subdivision
    std::shared_ptr<const DecompositionPoset> target;
    PosetMap map;             ///< chains.poset -> target->poset
};

/// The map (U(L)_{>0})' -> D(L).
FlagMap flag_to_decomposition(const SymplecticModule& l, unsigned workers = 1);

}  // namespace cmposet
