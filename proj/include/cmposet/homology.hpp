#pragma once

#include <climits>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cmposet/order_complex.hpp"

namespace cmposet {

/// Betti numbers and torsion coefficients per degree, starting at
/// `first_degree` (-1 for reduced homology, 0 for relative homology).
/// Degrees above `computed_through` were not computed unless `complete`, in
/// which case they are zero.
struct HomologyProfile {
    int first_degree = -1;
    int computed_through = -1;
    bool complete = false;
    std::vector<std::size_t> betti;
    std::vector<std::vector<BigInt>> torsion;

    std::size_t betti_at(int k) const;
    std::vector<BigInt> torsion_at(int k) const;
    bool zero_at(int k) const { return betti_at(k) == 0 && torsion_at(k).empty(); }
    /// Every degree <= n is zero. Throws std::out_of_range if degree n was
    /// not computed and the complex continues past it.
    bool vanishes_through(int n) const;
    /// Highest degree with nonzero homology; first_degree - 1 if none.
    int top_nonzero() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Same groups in every degree both profiles determine: all degrees when
/// both are complete, otherwise through the smaller computed degree.
bool same_homology(const HomologyProfile& a, const HomologyProfile& b);

class HomologyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Reduced integer homology of the order complex through `max_degree`.
/// Asserts ∂∘∂ = 0 and, when every degree is computed, the Euler
/// characteristic identity; failures throw HomologyError.
HomologyProfile reduced_homology(const OrderComplex& k, int max_degree = INT_MAX, unsigned workers = 1);

/// Builds just enough of the order complex for `max_degree`.
HomologyProfile reduced_homology(const FinitePoset& p, int max_degree = INT_MAX,
                                 std::size_t budget = default_chain_budget, unsigned workers = 1);

/// Homology of C(K)/C(L), L the full subcomplex on the vertices in `sub`.
HomologyProfile relative_homology(const OrderComplex& k, const std::vector<bool>& sub, int max_degree = INT_MAX,
                                  unsigned workers = 1);

/// H(P, P restricted to `sub`) for a vertex subset of P.
HomologyProfile relative_homology(const FinitePoset& p, const std::vector<bool>& sub, int max_degree = INT_MAX,
                                  std::size_t budget = default_chain_budget, unsigned workers = 1);

}  // namespace cmposet
