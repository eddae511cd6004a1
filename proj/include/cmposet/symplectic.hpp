#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmposet/ring.hpp"

namespace cmposet {

class SymplecticError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Free module R^n with an alternating Gram matrix. Construction rejects
/// forms that are not alternating or not quasi-unimodular.
class SymplecticModule {
public:
    SymplecticModule(ScalarRing ring, IntMatrix gram);

    /// g hyperbolic pairs (e_1, f_1, ..., e_g, f_g) followed by r radical
    /// lines, with <e_i, f_i> = 1.
    static SymplecticModule standard(const ScalarRing& ring, int genus, int radical_rank = 0);

    const ScalarRing& ring() const { return ring_; }
    int rank() const { return static_cast<int>(gram_.rows()); }
    const IntMatrix& gram() const { return gram_; }
    int genus() const { return genus_; }
    bool unimodular() const { return 2 * genus_ == rank(); }

    std::int64_t pair(const IntVector& a, const IntVector& b) const;
    /// rows * G * rows^T
    IntMatrix gram_of(const IntMatrix& rows) const;
    /// a * G * b^T
    IntMatrix pairing(const IntMatrix& a, const IntMatrix& b) const;

    std::string describe() const;

private:
    ScalarRing ring_;
    IntMatrix gram_;
    int genus_ = 0;
};

/// A saturated submodule of R^n in canonical form: RREF rows over a field,
/// Hermite normal form over Z. Equal submodules have equal bases.
class Submodule {
public:
    Submodule() = default;
    static Submodule span(const ScalarRing& ring, int ambient_rank, const IntMatrix& generators);
    static Submodule zero(const ScalarRing& ring, int ambient_rank);
    static Submodule whole(const ScalarRing& ring, int ambient_rank);
    /// Wraps rows already in canonical form (checked).
    static Submodule from_canonical(const ScalarRing& ring, IntMatrix basis);

    const ScalarRing& ring() const { return ring_; }
    int ambient_rank() const { return static_cast<int>(basis_.cols()); }
    int rank() const { return static_cast<int>(basis_.rows()); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const IntVector& v) const;
    bool contains(const Submodule& s) const;

    /// Compact text form of the basis, e.g. "[1000,0100]" over small fields.
    std::string key() const;

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.ring_ == b.ring_ && a.basis_.rows() == b.basis_.rows() && a.basis_.cols() == b.basis_.cols() &&
               a.basis_ == b.basis_;
    }
    /// Canonical order: rank, then basis entries.
    friend bool operator<(const Submodule& a, const Submodule& b) { return lex_less(a.basis_, b.basis_); }

private:
    ScalarRing ring_;
    IntMatrix basis_ = IntMatrix(0, 0);
};

struct SubmoduleHash {
    std::size_t operator()(const Submodule& s) const;
};

Submodule radical(const SymplecticModule& l);
Submodule perp(const SymplecticModule& l, const Submodule& s);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);

struct UnimodularTest {
    bool unimodular = false;
    int genus = 0;
};

/// Restricted form on s is unimodular; the zero module is, with genus 0.
UnimodularTest unimodular_test(const SymplecticModule& l, const Submodule& s);

/// L̄ = L / L_o with lifts of its basis and the projection from L coordinates.
struct RadicalQuotient {
    SymplecticModule module;
    IntMatrix lift;        ///< row i: a lift of the i-th basis vector of L̄
    IntMatrix projection;  ///< n x m; v (as row) * projection = image in L̄
    Submodule radical;
};
RadicalQuotient quotient_by_radical(const SymplecticModule& l);

/// The sublattice L_v = {u : <u, v> = 0 for all v in vs} of L together with
/// its induced form. `vs` holds lifts (rows in L coordinates) of an
/// isotropic sequence whose image in L̄ is a partial basis.
struct RestrictedModule {
    SymplecticModule module;
    Submodule carrier;     ///< L_v inside L
    IntMatrix embedding;   ///< rows: basis of L_v in L coordinates
};
RestrictedModule restrict_Lv(const SymplecticModule& l, const IntMatrix& vs);

/// Checks that the rows are pairwise orthogonal and project to a partial basis
/// of L̄.
bool is_isotropic_partial_basis(const SymplecticModule& l, const IntMatrix& vs);

/// All unimodular submodules of L (finite field only), sorted canonically.
/// The search is split by pivot pattern across `workers` threads.
std::vector<Submodule> enumerate_unimodular_submodules(const SymplecticModule& l, unsigned workers = 1);

/// All subspaces of dimension k of F_p^n in RREF, sorted canonically.
std::vector<IntMatrix> enumerate_subspaces(const ScalarRing& ring, int n, int k);

/// Certificate of the unimodular completion u + u'.
struct CompletionCertificate {
    Submodule result;
    IntMatrix e;          ///< lifts e_0..e_k of vs inside u
    IntMatrix f;          ///< f_0..f_k completing e to a symplectic basis of u
    IntMatrix corrected;  ///< f_i - f'_i, perpendicular to u'
    int genus = 0;
    bool verified = false;
    std::string failure;
};

/// Given u unimodular of genus k+1 whose image contains the isotropic
/// sequence vs (k+1 lifts in L coordinates) and u' unimodular inside L_vs,
/// builds the symplectic basis (e; f - f') and checks that u + u' is the
/// orthogonal sum of its span with u'. Throws SymplecticError when the
/// preconditions fail.
CompletionCertificate unimodular_completion(const SymplecticModule& l, const Submodule& u, const IntMatrix& vs,
                                            const Submodule& u_prime);

}  // namespace cmposet
