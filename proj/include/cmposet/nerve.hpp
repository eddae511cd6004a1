#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmposet/connectivity.hpp"
#include "cmposet/lattice_posets.hpp"

namespace cmposet {

// ---- connectivity of maps from fibres and links ----

enum class CorollaryVariant { C, C_op };
const char* to_string(CorollaryVariant v);

/// Per target element: the link (Y_{<y} for C, Y_{>y} for C_op) and the fibre
/// (y\f for C, f/y for C_op) with the levels they must reach.
struct CorollaryRow {
    Index y = 0;
    int t = 0;
    int link_level = 0;
    int fiber_level = 0;
    ConnectivityVerdict link;
    ConnectivityVerdict fiber;
};

struct CorollaryReport {
    CorollaryVariant variant = CorollaryVariant::C;
    int n = 0;
    std::vector<CorollaryRow> rows;
    VerdictStatus hypotheses = VerdictStatus::inconclusive;
    std::optional<ConnectivityVerdict> conclusion;  ///< map_connectivity(f, n)
};

/// (C): Y_{<y} is (t(y)-2)-connected and y\f is (n-t(y)-1)-connected.
/// (C_op): Y_{>y} is (n-t(y)-2)-connected and f/y is (t(y)-1)-connected.
/// Either one implies that f is n-connected, which is checked independently
/// when `conclusion` is set.
CorollaryReport check_corollary_conn(const PosetMap& f, const std::function<int(Index)>& t, int n,
                                     CorollaryVariant variant, const CheckOptions& opt = {}, bool conclusion = true);

// ---- covering families ----

/// Full subposets X_a of X indexed by A: down-closed, and a < b implies
/// X_a ⊇ X_b.
struct CoverFamily {
    std::shared_ptr<const FinitePoset> index;  ///< A
    std::shared_ptr<const FinitePoset> space;  ///< X
    std::vector<std::vector<bool>> members;    ///< a -> mask of X_a

    std::vector<Index> member_list(Index a) const;
    /// A_x: the a with x in X_a.
    std::vector<Index> containing(Index x) const;
};

struct CoverReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

CoverReport validate_cover(const CoverFamily& family);

/// Z = {(a, x) : x in X_a} inside A^op x X, with f: Z^op -> A and g: Z -> X.
struct ZPoset {
    std::shared_ptr<const FinitePoset> z;
    std::shared_ptr<const FinitePoset> z_op;
    std::vector<std::pair<Index, Index>> pairs;
    PosetMap f;
    PosetMap g;
};

/// Throws PosetError for an invalid cover.
ZPoset build_Z(const CoverFamily& family);

struct HypothesisRow {
    /// index_link: A_{<a}; member: X_a; space_link: X_{<x}; index_fiber: A_x.
    enum class Kind { index_link, member, space_link, index_fiber };
    Kind kind = Kind::member;
    Index element = 0;
    int level = 0;
    ConnectivityVerdict verdict;
};
const char* to_string(HypothesisRow::Kind k);

struct NerveHypothesisReport {
    int n = 0;
    std::vector<HypothesisRow> rows;
    VerdictStatus status = VerdictStatus::inconclusive;

    std::vector<const HypothesisRow*> failures() const;
};

using HeightFunction = std::function<int(Index)>;

/// Conditions (i) and (ii) at level n. Without explicit t_X / t_A the stored
/// heights (or the standard ones) are used.
NerveHypothesisReport check_nerve_hypotheses(const CoverFamily& family, int n, HeightFunction t_x = {},
                                             HeightFunction t_a = {}, const CheckOptions& opt = {});

// ---- witnesses for the second half ----

enum class Comparison { leq, geq };

/// Poset maps D -> X, consecutive ones pointwise comparable as stated by
/// `links`, the last one constant.
struct ZigZag {
    std::vector<std::vector<Index>> maps;
    std::vector<Comparison> links;  ///< links[i] relates maps[i] to maps[i+1]
};

/// Joins two certificates whose end and start maps agree.
ZigZag concatenate(const ZigZag& a, const ZigZag& b);

/// Violations of the zig-zag rules; `require_constant_end` demands a constant
/// final map.
std::vector<std::string> check_zigzag(const FinitePoset& domain, const FinitePoset& target, const ZigZag& z,
                                      bool require_constant_end = true);

/// For every a: s[a][i] = s_a(b_i) and e[a][i * |X_a| + j] = e_a(b_i, x_j),
/// where b_i runs over A_{<a} and x_j over X_a in increasing index order; the
/// zig-zag lives on (A_{<a})^op ⋈ X_a laid out as by thick_join.
struct NerveWitness {
    std::vector<std::vector<Index>> s;
    std::vector<std::vector<Index>> e;
    std::vector<ZigZag> zigzag;
};

struct WitnessDomain {
    FinitePoset poset;           ///< (A_{<a})^op ⋈ X_a
    std::vector<Index> lower;    ///< A_{<a}
    std::vector<Index> members;  ///< X_a
};
WitnessDomain witness_domain(const CoverFamily& family, Index a);

/// ŝ_a on the witness domain: b -> s_a(b), x -> x, (b, x) -> e_a(b, x).
std::vector<Index> hat_s(const CoverFamily& family, const NerveWitness& w, Index a);

struct WitnessReport {
    std::vector<std::string> violations;
    std::size_t checked = 0;
    bool passed() const { return violations.empty(); }
};

/// Conditions (iii) and (iv): memberships, s_a(b) <= e_a(b, x) >= x,
/// monotonicity, and the zig-zag from ŝ_a to a constant map.
WitnessReport check_nerve_witness(const CoverFamily& family, const NerveWitness& w);

// ---- the covering of U(L) by the U(L_v)_{>0} ----

enum class CoverMode { interval, positive };

struct OrthogonalCover {
    CoverFamily family;
    SubmodulePoset space;                ///< U(L)_{(0,g)} or U(L)_{>0}
    SequencePoset index;                 ///< I(L/L_o)
    std::vector<IntMatrix> lifts;        ///< index element -> lifted vectors in L
    std::optional<NerveWitness> witness; ///< positive mode only
    int genus = 0;
};

/// Heights: g(u) - 1 on X and |v| - 1 on A. Throws SymplecticError if the
/// witness cannot be built. Finite fields only.
OrthogonalCover orthogonal_cover(const SymplecticModule& l, CoverMode mode);

}  // namespace cmposet
