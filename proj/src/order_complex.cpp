#include "cmposet/order_complex.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace cmposet {

OrderComplex::OrderComplex(const FinitePoset& p, int max_dim, std::size_t budget) : vertices_(p.size()) {
    if (max_dim < 0 || p.empty()) return;
    std::vector<std::vector<Index>> up(static_cast<std::size_t>(p.size()));
    for (Index x = 0; x < p.size(); ++x) up[static_cast<std::size_t>(x)] = p.above(x);

    std::size_t produced = 0;
    std::vector<Index> chain;
    // depth-first in increasing vertex order yields each dimension sorted lexicographically
    auto visit = [&](auto&& self, Index x) -> void {
        chain.push_back(x);
        const auto k = chain.size() - 1;
        if (simplices_.size() <= k) simplices_.emplace_back();
        simplices_[k].insert(simplices_[k].end(), chain.begin(), chain.end());
        if (++produced > budget)
            throw BudgetExceeded("order complex exceeds chain budget of " + std::to_string(budget));
        if (static_cast<int>(k) < max_dim) {
            for (Index y : up[static_cast<std::size_t>(x)]) self(self, y);
        } else if (!up[static_cast<std::size_t>(x)].empty()) {
            truncated_ = true;
        }
        chain.pop_back();
    };
    for (Index x = 0; x < p.size(); ++x) visit(visit, x);
}

std::size_t OrderComplex::count(int k) const {
    if (k == -1) return 1;
    if (k < -1 || k > dimension()) return 0;
    return simplices_[static_cast<std::size_t>(k)].size() / static_cast<std::size_t>(k + 1);
}

std::vector<std::size_t> OrderComplex::counts() const {
    std::vector<std::size_t> out;
    for (int k = 0; k <= dimension(); ++k) out.push_back(count(k));
    return out;
}

std::size_t OrderComplex::total() const {
    std::size_t n = 0;
    for (int k = 0; k <= dimension(); ++k) n += count(k);
    return n;
}

std::optional<std::size_t> OrderComplex::find(std::span<const Index> chain) const {
    const int k = static_cast<int>(chain.size()) - 1;
    if (k < 0 || k > dimension()) return std::nullopt;
    std::size_t lo = 0;
    std::size_t hi = count(k);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        auto s = simplex(k, mid);
        if (std::lexicographical_compare(s.begin(), s.end(), chain.begin(), chain.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count(k) && std::ranges::equal(simplex(k, lo), chain)) return lo;
    return std::nullopt;
}

SparseIntMatrix OrderComplex::boundary(int k, bool augmented) const {
    if (k == 0) {
        SparseIntMatrix m(augmented ? 1 : 0, static_cast<std::int32_t>(count(0)));
        if (augmented)
            for (auto& col : m.columns) col.push_back({0, 1});
        return m;
    }
    SparseIntMatrix m(static_cast<std::int32_t>(count(k - 1)), static_cast<std::int32_t>(count(k)));
    if (k < 0 || k > dimension()) return m;
    std::vector<Index> face(static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < count(k); ++j) {
        auto s = simplex(k, j);
        auto& col = m.columns[j];
        for (int drop = 0; drop <= k; ++drop) {
            std::size_t w = 0;
            for (int i = 0; i <= k; ++i)
                if (i != drop) face[w++] = s[static_cast<std::size_t>(i)];
            const auto row = find(face);
            col.push_back({static_cast<std::int32_t>(*row), (drop % 2 == 0) ? 1 : -1});
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    }
    return m;
}

std::vector<std::size_t> OrderComplex::relative_cells(int k, const std::vector<bool>& sub) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < count(k); ++i) {
        auto s = simplex(k, i);
        if (!std::ranges::all_of(s, [&](Index v) { return sub[static_cast<std::size_t>(v)]; })) out.push_back(i);
    }
    return out;
}

SparseIntMatrix OrderComplex::relative_boundary(int k, const std::vector<bool>& sub) const {
    const auto cols = relative_cells(k, sub);
    if (k <= 0) return SparseIntMatrix(0, static_cast<std::int32_t>(cols.size()));
    const auto rows = relative_cells(k - 1, sub);
    std::vector<std::int32_t> row_of(count(k - 1), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<std::int32_t>(r);
    const auto full = boundary(k, false);
    SparseIntMatrix m(static_cast<std::int32_t>(rows.size()), static_cast<std::int32_t>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& e : full.columns[cols[c]])
            if (row_of[static_cast<std::size_t>(e.row)] >= 0)
                m.columns[c].push_back({row_of[static_cast<std::size_t>(e.row)], e.value});
    return m;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
    SparseIntMatrix out(a.rows, b.cols);
    std::map<std::int32_t, std::int64_t> acc;
    for (std::int32_t j = 0; j < b.cols; ++j) {
        acc.clear();
        for (const auto& eb : b.columns[static_cast<std::size_t>(j)])
            for (const auto& ea : a.columns[static_cast<std::size_t>(eb.row)])
                acc[ea.row] = checked_add(acc[ea.row], checked_mul(ea.value, eb.value));
        for (const auto& [r, v] : acc)
            if (v != 0) out.columns[static_cast<std::size_t>(j)].push_back({r, v});
    }
    return out;
}

}  // namespace cmposet
