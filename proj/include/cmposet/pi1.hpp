#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmposet/order_complex.hpp"

namespace cmposet {

enum class Pi1Status { trivial, nontrivial, unknown };

const char* to_string(Pi1Status s);

/// Outcome of the fundamental-group probe with the size of the presentation
/// that was left after simplification.
struct Pi1Result {
    Pi1Status status = Pi1Status::unknown;
    std::size_t generators = 0;
    std::size_t relators = 0;
    std::string detail;
};

/// A finitely presented group. Letters are ±(g+1) for generator g.
struct Presentation {
    std::size_t generator_count = 0;
    std::vector<std::vector<int>> relators;
};

struct Pi1Limits {
    std::size_t coset_budget = 200'000;
    std::size_t max_substitution = 200'000;  ///< total letters a single Tietze move may write
    std::size_t max_enumeration_generators = 64;
};

/// Edge-path presentation of π₁ of a connected complex: generators are the
/// edges outside a spanning tree, relators come from the 2-simplices.
Presentation edge_path_presentation(const OrderComplex& k);

/// Tietze elimination of generators that occur once in some relator.
Presentation simplify(Presentation p, const Pi1Limits& limits = {});

/// Decides triviality when it can: an empty simplified presentation is
/// trivial, a nonzero abelianization or a completed coset enumeration with
/// more than one coset is nontrivial, anything else is unknown.
Pi1Result analyze(const Presentation& p, const Pi1Limits& limits = {});

/// Probe on an order complex enumerated through dimension 2 at least.
/// Disconnected or empty complexes report unknown.
Pi1Result pi1_probe(const OrderComplex& k, const Pi1Limits& limits = {});
Pi1Result pi1_probe(const FinitePoset& p, std::size_t chain_budget = default_chain_budget, const Pi1Limits& limits = {});

/// Number of cosets of the trivial subgroup (the group order) if coset
/// enumeration finishes within `budget` cosets, otherwise 0.
std::size_t todd_coxeter_order(const Presentation& p, std::size_t budget);

}  // namespace cmposet
