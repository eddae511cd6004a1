#include "cmposet/homology.hpp"

#include <algorithm>
#include <string>

#include "cmposet/parallel.hpp"

namespace cmposet {

std::size_t HomologyProfile::betti_at(int k) const {
    const int i = k - first_degree;
    if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
    return betti[static_cast<std::size_t>(i)];
}

std::vector<BigInt> HomologyProfile::torsion_at(int k) const {
    const int i = k - first_degree;
    if (i < 0 || i >= static_cast<int>(torsion.size())) return {};
    return torsion[static_cast<std::size_t>(i)];
}

bool same_homology(const HomologyProfile& a, const HomologyProfile& b) {
    int last = std::max(a.computed_through, b.computed_through);
    if (!a.complete) last = std::min(last, a.computed_through);
    if (!b.complete) last = std::min(last, b.computed_through);
    for (int k = std::min(a.first_degree, b.first_degree); k <= last; ++k)
        if (a.betti_at(k) != b.betti_at(k) || a.torsion_at(k) != b.torsion_at(k)) return false;
    return true;
}

bool HomologyProfile::vanishes_through(int n) const {
    for (int k = first_degree; k <= n; ++k) {
        if (k > computed_through) {
            if (complete) return true;
            throw std::out_of_range("homology not computed in degree " + std::to_string(k));
        }
        if (!zero_at(k)) return false;
    }
    return true;
}

int HomologyProfile::top_nonzero() const {
    for (int k = first_degree + static_cast<int>(betti.size()) - 1; k >= first_degree; --k)
        if (!zero_at(k)) return k;
    return first_degree - 1;
}

namespace {

void check_composition(const SparseIntMatrix& lower, const SparseIntMatrix& upper, int k) {
    if (lower.cols != upper.rows) throw HomologyError("boundary shapes disagree in degree " + std::to_string(k));
    if (multiply(lower, upper).nonzeros() != 0)
        throw HomologyError("boundary of boundary is nonzero in degree " + std::to_string(k));
}

// Assemble H_k for first <= k <= through from the SNF of each boundary map.
// `boundary(k)` returns ∂_k, `cells(k)` the rank of C_k.
template <typename BoundaryFn, typename CellsFn>
HomologyProfile assemble(int first, int through, int dim, bool complete, BoundaryFn&& boundary, CellsFn&& cells,
                         unsigned workers) {
    HomologyProfile h;
    h.first_degree = first;
    h.computed_through = through;
    h.complete = complete;
    if (through < first) return h;

    // ∂_k is needed for first+1 <= k <= through+1
    const int lo = first + 1;
    const int hi = through + 1;
    std::vector<SparseIntMatrix> maps(static_cast<std::size_t>(hi - lo + 1));
    std::vector<SmithInvariants> snf(maps.size());
    parallel_for(maps.size(), workers, [&](std::size_t i) {
        const int k = lo + static_cast<int>(i);
        maps[i] = k <= dim ? boundary(k) : SparseIntMatrix(static_cast<std::int32_t>(cells(k - 1)), 0);
    });
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) check_composition(maps[i], maps[i + 1], lo + static_cast<int>(i));
    for (std::size_t i = 0; i < maps.size(); ++i) snf[i] = smith_invariants(maps[i]);

    auto rank_of = [&](int k) -> std::size_t { return (k < lo || k > hi) ? 0 : snf[static_cast<std::size_t>(k - lo)].rank; };
    for (int k = first; k <= through; ++k) {
        const std::size_t c = cells(k);
        const std::size_t r = rank_of(k) + rank_of(k + 1);
        if (r > c) throw HomologyError("rank exceeds chain count in degree " + std::to_string(k));
        h.betti.push_back(c - r);
        h.torsion.push_back(snf[static_cast<std::size_t>(k + 1 - lo)].torsion);
    }
    if (complete) {
        long long chi_cells = 0;
        long long chi_betti = 0;
        for (int k = first; k <= through; ++k) {
            const long long sign = ((k - first) % 2 == 0) ? 1 : -1;
            chi_cells += sign * static_cast<long long>(cells(k));
            chi_betti += sign * static_cast<long long>(h.betti_at(k));
        }
        if (chi_cells != chi_betti) throw HomologyError("Euler characteristic mismatch");
    }
    return h;
}

}  // namespace

HomologyProfile reduced_homology(const OrderComplex& k, int max_degree, unsigned workers) {
    const int dim = k.dimension();
    const int valid = k.truncated() ? dim - 1 : dim;
    const int through = std::min(max_degree, std::max(valid, -1));
    const bool complete = !k.truncated() && max_degree >= dim;
    return assemble(
        -1, through, dim, complete, [&](int d) { return k.boundary(d, true); },
        [&](int d) -> std::size_t { return k.count(d); }, workers);
}

HomologyProfile reduced_homology(const FinitePoset& p, int max_degree, std::size_t budget, unsigned workers) {
    const int max_dim = max_degree >= INT_MAX - 1 ? INT_MAX : max_degree + 1;
    return reduced_homology(OrderComplex(p, max_dim, budget), max_degree, workers);
}

HomologyProfile relative_homology(const OrderComplex& k, const std::vector<bool>& sub, int max_degree,
                                  unsigned workers) {
    if (sub.size() != static_cast<std::size_t>(k.vertex_count()))
        throw std::invalid_argument("relative_homology: subcomplex mask has the wrong size");
    const int dim = k.dimension();
    const int valid = k.truncated() ? dim - 1 : dim;
    const int through = std::min(max_degree, valid);
    const bool complete = !k.truncated() && max_degree >= dim;
    return assemble(
        0, through, dim, complete, [&](int d) { return k.relative_boundary(d, sub); },
        [&](int d) -> std::size_t { return k.relative_cells(d, sub).size(); }, workers);
}

HomologyProfile relative_homology(const FinitePoset& p, const std::vector<bool>& sub, int max_degree,
                                  std::size_t budget, unsigned workers) {
    const int max_dim = max_degree >= INT_MAX - 1 ? INT_MAX : max_degree + 1;
    return relative_homology(OrderComplex(p, max_dim, budget), sub, max_degree, workers);
}

}  // namespace cmposet
