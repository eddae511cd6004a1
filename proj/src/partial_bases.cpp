#include "cmposet/partial_bases.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmposet {

bool is_partial_basis_with(const ScalarRing& ring, const IntMatrix& seq, const IntMatrix& w) {
    const Eigen::Index n = seq.rows() > 0 ? seq.cols() : w.cols();
    IntMatrix stacked(seq.rows() + w.rows(), n);
    if (seq.rows() > 0) stacked.topRows(seq.rows()) = seq;
    if (w.rows() > 0) stacked.bottomRows(w.rows()) = w;
    return is_partial_basis(ring, stacked);
}

SequencePoset build_O(const ScalarRing& ring, int n, const OConstraint& c) {
    if (!ring.enumerable()) throw std::invalid_argument("O(n) over " + ring.name() + " needs an explicit vector set");
    return build_O_from(ring, n, all_vectors(ring, n), c);
}

SequencePoset build_O_from(const ScalarRing& ring, int n, const IntMatrix& candidates, const OConstraint& c) {
    if (candidates.cols() != n) throw std::invalid_argument("candidate vectors have the wrong length");
    const IntMatrix w = c.frozen.rows() == 0 ? IntMatrix(0, n) : reduce(ring, c.frozen);
    if (w.cols() != n) throw std::invalid_argument("frozen vectors have the wrong length");
    if (!is_partial_basis(ring, w)) throw std::invalid_argument("frozen vectors are not a partial basis");

    std::vector<int> usable;
    for (int v = 0; v < candidates.rows(); ++v) {
        const IntVector x = reduce(ring, IntMatrix(candidates.row(v).transpose()));
        if (c.bound && ring.norm(last_coordinate(x)) > *c.bound) continue;
        usable.push_back(v);
    }
    const IntMatrix vecs = reduce(ring, candidates);
    const int max_len = n - static_cast<int>(w.rows());

    std::vector<std::vector<int>> words;
    std::vector<int> current;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == max_len) return;
        for (int v : usable) {
            if (std::find(current.begin(), current.end(), v) != current.end()) continue;
            current.push_back(v);
            if (is_partial_basis_with(ring, select_rows(vecs, current), w)) {
                words.push_back(current);
                self(self);
            }
            current.pop_back();
        }
    };
    extend(extend);
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    SequencePoset out;
    std::vector<std::string> labels;
    for (const auto& word : words) {
        out.sequences.push_back(select_rows(vecs, word));
        labels.push_back(sequence_text(ring, out.sequences.back()));
    }
    out.poset = subword_poset(words, std::move(labels));
    return out;
}

IntVector rho(const ScalarRing& ring, const IntMatrix& w, int i, const IntVector& v) {
    const IntVector wi = w.row(i).transpose();
    const std::int64_t b = last_coordinate(wi);
    if (ring.reduce(b) == 0) throw std::domain_error("rho needs p_n(w_i) != 0");
    const std::int64_t q = ring.euclid_q(last_coordinate(v), b);
    IntVector out(v.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) out(j) = ring.sub(v(j), ring.mul(q, wi(j)));
    return out;
}

IntMatrix rho_sequence(const ScalarRing& ring, const IntMatrix& w, int i, const IntMatrix& seq) {
    IntMatrix out(seq.rows(), seq.cols());
    for (Eigen::Index r = 0; r < seq.rows(); ++r) out.row(r) = rho(ring, w, i, seq.row(r).transpose()).transpose();
    return out;
}

}  // namespace cmposet
