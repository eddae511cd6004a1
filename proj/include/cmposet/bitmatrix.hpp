#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cmposet {

/// Square boolean matrix stored row-wise as 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

    std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
    std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }

    /// row(dst) |= row(src)
    void or_row(std::size_t dst, std::size_t src) {
        auto d = row(dst);
        auto s = row(src);
        for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
    }

    std::size_t row_count(std::size_t i) const {
        std::size_t c = 0;
        for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    template <typename F>
    void for_each_in_row(std::size_t i, F&& fn) const {
        auto r = row(i);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word != 0) {
                const int b = std::countr_zero(word);
                fn(w * 64 + static_cast<std::size_t>(b));
                word &= word - 1;
            }
        }
    }

    /// True when rows i (of this) and j (of other) share a set bit.
    bool rows_intersect(std::size_t i, const BitMatrix& other, std::size_t j) const {
        auto a = row(i);
        auto b = other.row(j);
        for (std::size_t w = 0; w < words_; ++w)
            if ((a[w] & b[w]) != 0) return true;
        return false;
    }

    BitMatrix transposed() const {
        BitMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i) for_each_in_row(i, [&](std::size_t j) { t.set(j, i); });
        return t;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace cmposet
