#include "cmposet/smith.hpp"

#include <numeric>

namespace cmposet {

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix m = IntMatrix::Zero(rows, cols);
    for (std::int32_t j = 0; j < cols; ++j)
        for (const auto& e : columns[static_cast<std::size_t>(j)]) m(e.row, j) = e.value;
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix s(static_cast<std::int32_t>(m.rows()), static_cast<std::int32_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0)
                s.columns[static_cast<std::size_t>(j)].push_back({static_cast<std::int32_t>(i), m(i, j)});
    return s;
}

std::vector<BigInt> SmithInvariants::all() const {
    std::vector<BigInt> out(rank - torsion.size(), BigInt(1));
    out.insert(out.end(), torsion.begin(), torsion.end());
    return out;
}

std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
    for (auto& x : d) x = abs_value(x);
    std::erase(d, BigInt(0));
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[i] == 1) break;
            const BigInt g = boost::multiprecision::gcd(d[i], d[j]);
            if (g == d[i]) continue;
            const BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

SmithInvariants summarize(std::vector<BigInt> diagonal) {
    SmithInvariants s;
    auto d = normalize_diagonal(std::move(diagonal));
    s.rank = d.size();
    for (auto& x : d)
        if (x != 1) s.torsion.push_back(x);
    return s;
}

template <typename Scalar>
struct Entry {
    std::int32_t row;
    Scalar value;
};

template <typename Scalar>
using Column = std::vector<Entry<Scalar>>;

template <typename Scalar>
const Entry<Scalar>* find_row(const Column<Scalar>& col, std::int32_t row) {
    auto it = std::lower_bound(col.begin(), col.end(), row, [](const Entry<Scalar>& e, std::int32_t r) { return e.row < r; });
    return (it != col.end() && it->row == row) ? &*it : nullptr;
}

template <typename Scalar>
SmithInvariants sparse_smith(const SparseIntMatrix& input) {
    const auto ncols = static_cast<std::size_t>(input.cols);
    const auto nrows = static_cast<std::size_t>(input.rows);
    std::vector<Column<Scalar>> cols(ncols);
    std::vector<std::vector<std::int32_t>> row_cols(nrows);
    std::vector<std::int64_t> row_nnz(nrows, 0);
    for (std::size_t j = 0; j < ncols; ++j) {
        for (const auto& e : input.columns[j]) {
            if (e.value == 0) continue;
            cols[j].push_back({e.row, Scalar(e.value)});
            row_cols[static_cast<std::size_t>(e.row)].push_back(static_cast<std::int32_t>(j));
            ++row_nnz[static_cast<std::size_t>(e.row)];
        }
    }
    std::vector<bool> alive(ncols, true);
    std::vector<BigInt> diagonal;

    std::vector<std::int32_t> order(ncols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return cols[static_cast<std::size_t>(a)].size() < cols[static_cast<std::size_t>(b)].size();
    });

    Column<Scalar> merged;
    // target -= factor * pivot_col, keeping rows sorted and row bookkeeping exact
    auto eliminate = [&](std::size_t target, const Column<Scalar>& pivot_col, const Scalar& factor) {
        const auto& t = cols[target];
        merged.clear();
        merged.reserve(t.size() + pivot_col.size());
        std::size_t i = 0;
        std::size_t k = 0;
        while (i < t.size() || k < pivot_col.size()) {
            if (k == pivot_col.size() || (i < t.size() && t[i].row < pivot_col[k].row)) {
                merged.push_back(t[i++]);
            } else if (i == t.size() || pivot_col[k].row < t[i].row) {
                const auto r = pivot_col[k].row;
                merged.push_back({r, checked_neg(checked_mul(factor, pivot_col[k].value))});
                row_cols[static_cast<std::size_t>(r)].push_back(static_cast<std::int32_t>(target));
                ++row_nnz[static_cast<std::size_t>(r)];
                ++k;
            } else {
                Scalar v = checked_sub(t[i].value, checked_mul(factor, pivot_col[k].value));
                if (v != 0) {
                    merged.push_back({t[i].row, std::move(v)});
                } else {
                    --row_nnz[static_cast<std::size_t>(t[i].row)];
                }
                ++i;
                ++k;
            }
        }
        cols[target].swap(merged);
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::int32_t c : order) {
            const auto cu = static_cast<std::size_t>(c);
            if (!alive[cu] || cols[cu].empty()) continue;
            // unit entry whose row is sparsest
            const Entry<Scalar>* pivot = nullptr;
            for (const auto& e : cols[cu]) {
                if (e.value != 1 && e.value != -1) continue;
                if (pivot == nullptr || row_nnz[static_cast<std::size_t>(e.row)] < row_nnz[static_cast<std::size_t>(pivot->row)])
                    pivot = &e;
            }
            if (pivot == nullptr) continue;
            const std::int32_t r = pivot->row;
            const Scalar pv = pivot->value;
            const Column<Scalar> pivot_col = cols[cu];
            auto users = std::move(row_cols[static_cast<std::size_t>(r)]);
            row_cols[static_cast<std::size_t>(r)].clear();
            for (std::int32_t c2 : users) {
                const auto c2u = static_cast<std::size_t>(c2);
                if (c2u == cu || !alive[c2u]) continue;
                const auto* hit = find_row(cols[c2u], r);
                if (hit == nullptr) continue;
                eliminate(c2u, pivot_col, checked_mul(hit->value, pv));
            }
            for (const auto& e : pivot_col) --row_nnz[static_cast<std::size_t>(e.row)];
            alive[cu] = false;
            cols[cu].clear();
            diagonal.emplace_back(1);
            progress = true;
        }
    }

    // whatever is left has no unit entries; finish densely
    std::vector<std::size_t> rest_cols;
    std::vector<std::int32_t> row_map(nrows, -1);
    std::int32_t rest_rows = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (!alive[j] || cols[j].empty()) continue;
        rest_cols.push_back(j);
        for (const auto& e : cols[j])
            if (row_map[static_cast<std::size_t>(e.row)] < 0) row_map[static_cast<std::size_t>(e.row)] = rest_rows++;
    }
    if (!rest_cols.empty()) {
        if (static_cast<double>(rest_rows) * static_cast<double>(rest_cols.size()) > 4.0e7)
            throw OverflowError();  // dense fallback would not fit; caller escalates
        DenseMatrix<Scalar> dense = DenseMatrix<Scalar>::Zero(rest_rows, static_cast<Eigen::Index>(rest_cols.size()));
        for (std::size_t k = 0; k < rest_cols.size(); ++k)
            for (const auto& e : cols[rest_cols[k]])
                dense(row_map[static_cast<std::size_t>(e.row)], static_cast<Eigen::Index>(k)) = e.value;
        auto d = smith_decomposition<Scalar>(std::move(dense), false);
        for (auto& x : d.invariants) diagonal.push_back(to_big(x));
    }
    return summarize(std::move(diagonal));
}

}  // namespace

SmithInvariants smith_invariants(const SparseIntMatrix& m) {
    try {
        return sparse_smith<std::int64_t>(m);
    } catch (const OverflowError&) {
        return sparse_smith<BigInt>(m);
    }
}

SmithInvariants smith_invariants_dense(const IntMatrix& m) {
    try {
        auto d = smith_decomposition<std::int64_t>(m, false);
        std::vector<BigInt> diag;
        for (auto x : d.invariants) diag.push_back(to_big(x));
        return summarize(std::move(diag));
    } catch (const OverflowError&) {
        auto d = smith_decomposition<BigInt>(m.cast<BigInt>(), false);
        return summarize(d.invariants);
    }
}

namespace {

BigInt bareiss_determinant(BigMatrix a) {
    const Eigen::Index n = a.rows();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace

template <typename Scalar>
bool verify_smith(const DenseMatrix<Scalar>& m, const SmithDecomposition<Scalar>& d) {
    const BigMatrix mb = m.template cast<BigInt>();
    const BigMatrix l = d.left.template cast<BigInt>();
    const BigMatrix r = d.right.template cast<BigInt>();
    if (l.rows() != m.rows() || r.rows() != m.cols()) return false;
    const BigInt dl = bareiss_determinant(l);
    const BigInt dr = bareiss_determinant(r);
    if (abs_value(dl) != 1 || abs_value(dr) != 1) return false;
    const BigMatrix product = exact_product(exact_product(l, mb), r);
    for (Eigen::Index i = 0; i < product.rows(); ++i) {
        for (Eigen::Index j = 0; j < product.cols(); ++j) {
            BigInt expect = 0;
            if (i == j && static_cast<std::size_t>(i) < d.invariants.size()) expect = to_big(d.invariants[static_cast<std::size_t>(i)]);
            if (product(i, j) != expect) return false;
        }
    }
    for (std::size_t k = 0; k < d.invariants.size(); ++k) {
        if (d.invariants[k] <= 0) return false;
        if (k + 1 < d.invariants.size() && d.invariants[k + 1] % d.invariants[k] != 0) return false;
    }
    return true;
}

template bool verify_smith<std::int64_t>(const IntMatrix&, const SmithDecomposition<std::int64_t>&);
template bool verify_smith<BigInt>(const BigMatrix&, const SmithDecomposition<BigInt>&);

}  // namespace cmposet
