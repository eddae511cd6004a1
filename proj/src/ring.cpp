#include "cmposet/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace cmposet {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

ScalarRing ScalarRing::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p > 3037000499) throw std::invalid_argument("characteristic too large for 64-bit products");
    ScalarRing r;
    r.kind_ = Kind::prime_field;
    r.p_ = p;
    return r;
}

ScalarRing ScalarRing::integers() { return ScalarRing(); }

ScalarRing ScalarRing::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "z" || s == "int" || s == "integers") return integers();
    std::string digits;
    if (s.starts_with("gf(") && s.ends_with(")"))
        digits = s.substr(3, s.size() - 4);
    else if (s.starts_with("p") || s.starts_with("f"))
        digits = s.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("unrecognised ring '" + std::string(text) + "'");
    return prime_field(std::stoll(digits));
}

std::string ScalarRing::name() const { return is_field() ? "F" + std::to_string(p_) : "Z"; }

std::int64_t ScalarRing::reduce(std::int64_t a) const {
    if (!is_field()) return a;
    a %= p_;
    return a < 0 ? a + p_ : a;
}

std::int64_t ScalarRing::add(std::int64_t a, std::int64_t b) const {
    return is_field() ? reduce(a + b) : checked_add(a, b);
}

std::int64_t ScalarRing::sub(std::int64_t a, std::int64_t b) const {
    return is_field() ? reduce(a - b) : checked_sub(a, b);
}

std::int64_t ScalarRing::mul(std::int64_t a, std::int64_t b) const {
    return is_field() ? reduce(reduce(a) * reduce(b)) : checked_mul(a, b);
}

bool ScalarRing::is_unit(std::int64_t a) const { return is_field() ? reduce(a) != 0 : (a == 1 || a == -1); }

std::int64_t ScalarRing::inverse(std::int64_t a) const {
    if (!is_unit(a)) throw std::domain_error("not a unit");
    if (!is_field()) return a;
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = reduce(a);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

std::int64_t ScalarRing::norm(std::int64_t a) const {
    if (is_field()) return reduce(a) == 0 ? 0 : 1;
    return abs_value(a);
}

std::int64_t ScalarRing::euclid_q(std::int64_t a, std::int64_t b) const {
    if (reduce(b) == 0) throw std::domain_error("division by zero");
    if (is_field()) return mul(a, inverse(b));
    return a / b;
}

IntMatrix reduce(const ScalarRing& r, IntMatrix m) {
    if (r.is_field()) m = m.unaryExpr([&](std::int64_t v) { return r.reduce(v); });
    return m;
}

IntMatrix multiply(const ScalarRing& r, const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    IntMatrix out = IntMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                for (Eigen::Index j = 0; j < b.cols(); ++j)
                    if (b(k, j) != 0) out(i, j) = r.add(out(i, j), r.mul(a(i, k), b(k, j)));
    return out;
}

IntVector apply(const ScalarRing& r, const IntMatrix& a, const IntVector& x) {
    IntMatrix col = x;
    return multiply(r, a, col).col(0);
}

namespace {

struct FieldEchelon {
    IntMatrix m;
    std::vector<Eigen::Index> pivots;
};

FieldEchelon field_rref(const ScalarRing& r, IntMatrix m) {
    m = reduce(r, std::move(m));
    FieldEchelon out;
    Eigen::Index row = 0;
    for (Eigen::Index c = 0; c < m.cols() && row < m.rows(); ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.row(row).swap(m.row(piv));
        const std::int64_t inv = r.inverse(m(row, c));
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = r.mul(m(row, j), inv);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c) == 0) continue;
            const std::int64_t f = m(i, c);
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = r.sub(m(i, j), r.mul(f, m(row, j)));
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.m = m.topRows(row);
    return out;
}

IntMatrix integer_hnf(IntMatrix a) {
    Eigen::Index row = 0;
    for (Eigen::Index c = 0; c < a.cols() && row < a.rows(); ++c) {
        for (;;) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = row; i < a.rows(); ++i)
                if (a(i, c) != 0 && (piv < 0 || abs_value(a(i, c)) < abs_value(a(piv, c)))) piv = i;
            if (piv < 0) break;
            a.row(row).swap(a.row(piv));
            bool done = true;
            for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                detail::row_axpy<std::int64_t>(a, i, row, a(i, c) / a(row, c));
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (row >= a.rows() || a(row, c) == 0) continue;
        if (a(row, c) < 0) a.row(row) = -a.row(row);
        for (Eigen::Index i = 0; i < row; ++i) {
            std::int64_t q = a(i, c) / a(row, c);
            if (a(i, c) - q * a(row, c) < 0) --q;  // floor, so the entry lands in [0, pivot)
            if (q != 0) detail::row_axpy<std::int64_t>(a, i, row, q);
        }
        ++row;
    }
    return a.topRows(row);
}

}  // namespace

std::size_t rank(const ScalarRing& r, const IntMatrix& m) {
    if (r.is_field()) return field_rref(r, m).pivots.size();
    return smith_invariants_dense(m).rank;
}

IntMatrix echelon(const ScalarRing& r, const IntMatrix& m) {
    return r.is_field() ? field_rref(r, m).m : integer_hnf(m);
}

IntMatrix right_kernel(const ScalarRing& r, const IntMatrix& m) {
    const Eigen::Index n = m.cols();
    if (r.is_field()) {
        const auto e = field_rref(r, m);
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        IntMatrix k = IntMatrix::Zero(n - static_cast<Eigen::Index>(e.pivots.size()), n);
        Eigen::Index row = 0;
        for (Eigen::Index free = 0; free < n; ++free) {
            if (is_pivot[static_cast<std::size_t>(free)]) continue;
            k(row, free) = 1;
            for (std::size_t i = 0; i < e.pivots.size(); ++i)
                k(row, e.pivots[i]) = r.neg(e.m(static_cast<Eigen::Index>(i), free));
            ++row;
        }
        return k;
    }
    if (m.rows() == 0) return IntMatrix::Identity(n, n);
    const auto d = smith_decomposition<std::int64_t>(m, true);
    const auto rk = static_cast<Eigen::Index>(d.invariants.size());
    return d.right.rightCols(n - rk).transpose();
}

IntMatrix saturate(const ScalarRing& r, const IntMatrix& rows) {
    if (r.is_field()) return echelon(r, rows);
    const IntMatrix k = right_kernel(r, rows);
    if (k.rows() == 0) return IntMatrix::Identity(rows.cols(), rows.cols());
    return right_kernel(r, k);
}

std::optional<IntVector> solve(const ScalarRing& r, const IntMatrix& m, const IntVector& b) {
    const Eigen::Index n = m.cols();
    if (r.is_field()) {
        IntMatrix aug(m.rows(), n + 1);
        aug << m, b;
        const auto e = field_rref(r, aug);
        IntVector x = IntVector::Zero(n);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            if (e.pivots[i] == n) return std::nullopt;
            x(e.pivots[i]) = e.m(static_cast<Eigen::Index>(i), n);
        }
        return x;
    }
    const auto d = smith_decomposition<std::int64_t>(m, true);
    const IntVector lb = apply(r, d.left, b);
    IntVector y = IntVector::Zero(n);
    for (Eigen::Index i = 0; i < lb.size(); ++i) {
        if (static_cast<std::size_t>(i) < d.invariants.size()) {
            const std::int64_t di = d.invariants[static_cast<std::size_t>(i)];
            if (lb(i) % di != 0) return std::nullopt;
            y(i) = lb(i) / di;
        } else if (lb(i) != 0) {
            return std::nullopt;
        }
    }
    return apply(r, d.right, y);
}

std::optional<IntMatrix> inverse(const ScalarRing& r, const IntMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const Eigen::Index n = m.rows();
    if (r.is_field()) {
        IntMatrix aug(n, 2 * n);
        aug << m, IntMatrix::Identity(n, n);
        const auto e = field_rref(r, aug);
        if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] >= n))
            return std::nullopt;
        return IntMatrix(e.m.rightCols(n));
    }
    const auto d = smith_decomposition<std::int64_t>(m, true);
    if (static_cast<Eigen::Index>(d.invariants.size()) < n) return std::nullopt;
    for (auto v : d.invariants)
        if (v != 1) return std::nullopt;
    return multiply(r, d.right, d.left);
}

bool is_partial_basis(const ScalarRing& r, const IntMatrix& rows) {
    if (r.is_field()) return rank(r, rows) == static_cast<std::size_t>(rows.rows());
    const auto s = smith_invariants_dense(rows);
    return s.rank == static_cast<std::size_t>(rows.rows()) && s.torsion.empty();
}

IntMatrix complete_basis(const ScalarRing& r, const IntMatrix& rows) {
    const Eigen::Index n = rows.cols();
    if (!is_partial_basis(r, rows)) throw std::invalid_argument("rows do not extend to a basis");
    if (r.is_field()) {
        const auto e = field_rref(r, rows);
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        IntMatrix out = IntMatrix::Zero(n - rows.rows(), n);
        Eigen::Index k = 0;
        for (Eigen::Index j = 0; j < n; ++j)
            if (!is_pivot[static_cast<std::size_t>(j)]) out(k++, j) = 1;
        return out;
    }
    if (rows.rows() == 0) return IntMatrix::Identity(n, n);
    // left * rows * right = [I 0], so the last rows of right^{-1} complete the basis
    const auto d = smith_decomposition<std::int64_t>(rows, true);
    const auto w = inverse(r, d.right);
    return w->bottomRows(n - rows.rows());
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
}

}  // namespace cmposet
