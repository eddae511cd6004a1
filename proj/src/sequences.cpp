#include "cmposet/sequences.hpp"

#include <map>

namespace cmposet {

FinitePoset subword_poset(const std::vector<std::vector<int>>& words, std::vector<std::string> labels) {
    std::map<std::vector<int>, Index> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].empty()) throw PosetError("subword poset: empty word");
        if (!index.emplace(words[i], static_cast<Index>(i)).second) throw PosetError("subword poset: repeated word");
    }
    std::vector<Relation> rel;
    std::vector<int> height;
    height.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto& w = words[i];
        height.push_back(static_cast<int>(w.size()) - 1);
        if (w.size() < 2) continue;
        for (std::size_t drop = 0; drop < w.size(); ++drop) {
            std::vector<int> face;
            face.reserve(w.size() - 1);
            for (std::size_t j = 0; j < w.size(); ++j)
                if (j != drop) face.push_back(w[j]);
            auto it = index.find(face);
            if (it == index.end()) throw PosetError("subword poset: family is not closed under subwords");
            rel.emplace_back(it->second, static_cast<Index>(i));
        }
    }
    return FinitePoset::from_relations(std::move(labels), rel, std::move(height));
}

IntMatrix all_vectors(const ScalarRing& ring, int n, bool include_zero) {
    if (!ring.enumerable()) throw std::invalid_argument("cannot enumerate vectors over " + ring.name());
    const std::int64_t p = ring.characteristic();
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    IntMatrix out(include_zero ? total : total - 1, n);
    Eigen::Index row = 0;
    for (std::int64_t code = include_zero ? 0 : 1; code < total; ++code) {
        std::int64_t c = code;
        for (int j = n - 1; j >= 0; --j) {
            out(row, j) = c % p;
            c /= p;
        }
        ++row;
    }
    return out;
}

std::string vector_text(const ScalarRing& ring, const IntMatrix& row) {
    const bool digits = ring.is_field() && ring.characteristic() <= 10;
    std::string out = digits ? "" : "(";
    for (Eigen::Index j = 0; j < row.size(); ++j) {
        if (!digits && j > 0) out += " ";
        out += std::to_string(row.data()[j]);
    }
    return digits ? out : out + ")";
}

std::string sequence_text(const ScalarRing& ring, const IntMatrix& rows) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        if (i > 0) out += ",";
        out += vector_text(ring, IntMatrix(rows.row(i)));
    }
    return out + ")";
}

IntMatrix select_rows(const IntMatrix& m, const std::vector<int>& which) {
    IntMatrix out(static_cast<Eigen::Index>(which.size()), m.cols());
    for (std::size_t i = 0; i < which.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(which[i]);
    return out;
}

}  // namespace cmposet
