#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cmposet/smith.hpp"

namespace cmposet {

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// A Euclidean scalar ring: a prime field F_p or the integers. Scalars are
/// int64; field elements are kept reduced to [0, p).
class ScalarRing {
public:
    enum class Kind { prime_field, integers };

    static ScalarRing prime_field(std::int64_t p);
    static ScalarRing integers();
    /// "p2", "F3", "GF(5)", "Z" (case-insensitive).
    static ScalarRing parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::prime_field; }
    bool enumerable() const { return is_field(); }
    /// p for F_p, 0 for Z.
    std::int64_t characteristic() const { return p_; }
    std::string name() const;

    std::int64_t reduce(std::int64_t a) const;
    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const { return sub(0, a); }
    bool is_unit(std::int64_t a) const;
    /// Inverse of a unit; throws std::domain_error otherwise.
    std::int64_t inverse(std::int64_t a) const;

    /// |a| on Z; 0 or 1 on a field.
    std::int64_t norm(std::int64_t a) const;
    /// Quotient with norm(a - q b) < norm(b). On Z this truncates toward
    /// zero, so q = 0 whenever |a| < |b|. Throws std::domain_error for b = 0.
    std::int64_t euclid_q(std::int64_t a, std::int64_t b) const;

    friend bool operator==(const ScalarRing&, const ScalarRing&) = default;

private:
    Kind kind_ = Kind::integers;
    std::int64_t p_ = 0;
};

// Linear algebra over a ScalarRing. Matrices hold reduced scalars; bases
// are stored as rows.

IntMatrix reduce(const ScalarRing& r, IntMatrix m);
IntMatrix multiply(const ScalarRing& r, const IntMatrix& a, const IntMatrix& b);
IntVector apply(const ScalarRing& r, const IntMatrix& a, const IntVector& x);

std::size_t rank(const ScalarRing& r, const IntMatrix& m);

/// Reduced row echelon form over a field, Hermite normal form over Z (pivots
/// positive, entries above a pivot in [0, pivot)). Zero rows removed.
IntMatrix echelon(const ScalarRing& r, const IntMatrix& m);

/// Basis (rows) of {x : m x = 0}; saturated over Z.
IntMatrix right_kernel(const ScalarRing& r, const IntMatrix& m);

/// Rows spanning the saturation of the row span (the row span itself over a
/// field).
IntMatrix saturate(const ScalarRing& r, const IntMatrix& rows);

/// Some x with m x = b, if one exists.
std::optional<IntVector> solve(const ScalarRing& r, const IntMatrix& m, const IntVector& b);

/// Inverse of a square matrix whose determinant is a unit.
std::optional<IntMatrix> inverse(const ScalarRing& r, const IntMatrix& m);

/// Rows that extend to a basis of R^n.
bool is_partial_basis(const ScalarRing& r, const IntMatrix& rows);

/// Rows C such that [rows; C] is a basis of R^n. Requires is_partial_basis.
IntMatrix complete_basis(const ScalarRing& r, const IntMatrix& rows);

/// Lexicographic comparison of matrices of equal shape (shape first).
bool lex_less(const IntMatrix& a, const IntMatrix& b);

}  // namespace cmposet
