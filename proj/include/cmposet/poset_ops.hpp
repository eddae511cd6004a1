#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmposet/poset.hpp"

namespace cmposet {

// Generic constructions on finite posets.
//
// Disjoint unions keep element labels when the pieces have disjoint label
// sets; otherwise every label is prefixed with the index of its piece ("0:",
// "1:", ...). Layouts are documented per function so callers can address the
// pieces by index.

FinitePoset opposite(const FinitePoset& p);

/// X * Y: X occupies [0,|X|), Y follows; every x is below every y.
FinitePoset join(const FinitePoset& x, const FinitePoset& y);

/// X ⋈ Y: X, then Y, then the pairs (x,y) at |X| + |Y| + x*|Y| + y, with
/// x < (x,y) > y and the product order on pairs.
FinitePoset thick_join(const FinitePoset& x, const FinitePoset& y);
inline Index thick_join_pair(Index x_size, Index y_size, Index x, Index y) { return x_size + y_size + x * y_size + y; }

/// h(X,Y): X ⋈ Y -> X * Y, x -> x, (x,y) -> y, y -> y.
PosetMap collapse_map(const FinitePoset& x, const FinitePoset& y);

enum class CylinderMode { full, truncated, cone };

struct Cylinder {
    FinitePoset poset;
    Index source_count = 0;               ///< source elements occupy [0, source_count)
    std::vector<Index> target_position;   ///< target index -> cylinder index, -1 if truncated away
    std::optional<Index> cone_vertex;
};

/// M(f): source X and target Y with x > y iff f(x) >= y. `truncated` keeps
/// Y_{<=k} (target height required); `cone` adds a vertex below all of X.
Cylinder mapping_cylinder(const PosetMap& f, CylinderMode mode = CylinderMode::full, int k = 0);

/// M^op(f) = M(f^op)^op: every x lies below f(x). Same layout as M(f).
Cylinder dual_cylinder(const PosetMap& f);

enum class FiberSide { under, over };

/// f/y = {x : f(x) <= y} (under) or y\f = {x : f(x) >= y} (over), with the
/// source indices of the elements kept.
struct Fiber {
    FinitePoset poset;
    std::vector<Index> elements;
};
Fiber fiber(const PosetMap& f, Index y, FiberSide side);

FinitePoset below(const FinitePoset& p, Index x);
FinitePoset above(const FinitePoset& p, Index x);
/// Open interval (x, y); throws PosetError unless x < y.
FinitePoset open_interval(const FinitePoset& p, Index x, Index y);

struct ChainPoset {
    FinitePoset poset;
    std::vector<std::vector<Index>> chains;  ///< element -> its chain, increasing
};

/// Nonempty chains of `p` ordered by inclusion. Throws BudgetExceeded when the
/// number of chains exceeds `budget`.
ChainPoset barycentric_subdivision_chains(const FinitePoset& p, std::size_t budget = 5'000'000);
inline FinitePoset barycentric_subdivision(const FinitePoset& p) { return barycentric_subdivision_chains(p).poset; }

/// Compares the link of y inside M(f, <= hgt(y)-1) ∪ {y} with the join
/// Y_{<y} * (y\f), element for element.
bool cylinder_link_check(const PosetMap& f, Index y);

/// True when the order of `p` restricted to `elements` (in that order) is the
/// order of `q`.
bool order_matches(const FinitePoset& p, std::span<const Index> elements, const FinitePoset& q);

/// Backtracking search for an order isomorphism p -> q (small posets only).
std::optional<std::vector<Index>> find_isomorphism(const FinitePoset& p, const FinitePoset& q);

std::vector<std::string> disjoint_labels(std::initializer_list<const std::vector<std::string>*> pieces);

}  // namespace cmposet
