#pragma once

#include <cstdint>
#include <optional>

#include "cmposet/sequences.hpp"

namespace cmposet {

/// Restrictions on the partial-basis poset O(n).
struct OConstraint {
    /// O(n, k): every vector has ||p_n(v)|| <= k.
    std::optional<std::int64_t> bound;
    /// O(n)_w: sequences v with (v, w) a partial basis; rows of w.
    IntMatrix frozen = IntMatrix(0, 0);
};

/// p_n: the last coordinate.
inline std::int64_t last_coordinate(const IntVector& v) { return v(v.size() - 1); }

/// (rows of seq, rows of w) extends to a basis of R^n.
bool is_partial_basis_with(const ScalarRing& ring, const IntMatrix& seq, const IntMatrix& w);

/// O(n) over a finite field, ordered by subsequence, height |v| - 1.
/// Throws std::invalid_argument over the integers.
SequencePoset build_O(const ScalarRing& ring, int n, const OConstraint& c = {});

/// The same poset restricted to sequences of vectors from `candidates`
/// (rows); this is the only way to build O(n) over the integers.
SequencePoset build_O_from(const ScalarRing& ring, int n, const IntMatrix& candidates, const OConstraint& c = {});

/// rho_{w,i}(v) = v - q(p_n(v), p_n(w_i)) w_i. Throws std::domain_error
/// when p_n(w_i) = 0.
IntVector rho(const ScalarRing& ring, const IntMatrix& w, int i, const IntVector& v);

/// rho applied to every vector of a sequence.
IntMatrix rho_sequence(const ScalarRing& ring, const IntMatrix& w, int i, const IntMatrix& seq);

}  // namespace cmposet
