#include "cmposet/stability.hpp"

#include <algorithm>

#include "cmposet/sequences.hpp"

namespace cmposet {

bool is_split_unimodular(const SymplecticModule& l, const IntMatrix& pairs) {
    if (pairs.rows() % 2 != 0 || pairs.cols() != l.rank()) return false;
    const IntMatrix g = l.gram_of(reduce(l.ring(), pairs));
    const auto& r = l.ring();
    for (Eigen::Index a = 0; a < g.rows(); ++a)
        for (Eigen::Index b = 0; b < g.cols(); ++b) {
            std::int64_t want = 0;
            if (a / 2 == b / 2 && a != b) want = a % 2 == 0 ? 1 : r.reduce(-1);
            if (g(a, b) != want) return false;
        }
    return true;
}

bool hu_leq(const IntMatrix& a, const IntMatrix& b) {
    Eigen::Index j = 0;
    for (Eigen::Index i = 0; i < a.rows(); i += 2) {
        while (j < b.rows() && !(b.row(j) == a.row(i) && b.row(j + 1) == a.row(i + 1))) j += 2;
        if (j >= b.rows()) return false;
        j += 2;
    }
    return true;
}

SequencePoset build_HU(int g, const ScalarRing& ring) {
    if (g < 1) throw SymplecticError("HU_g needs g >= 1");
    if (!ring.enumerable()) throw SymplecticError("HU_g over " + ring.name() + " is infinite");
    const auto l = SymplecticModule::standard(ring, g);
    const IntMatrix vecs = all_vectors(ring, l.rank());
    const IntMatrix pairing = l.pairing(vecs, vecs);
    // letters: ordered hyperbolic pairs (v, w) with <v, w> = 1
    std::vector<std::pair<int, int>> letters;
    for (int v = 0; v < vecs.rows(); ++v)
        for (int w = 0; w < vecs.rows(); ++w)
            if (pairing(v, w) == 1) letters.emplace_back(v, w);
    auto orthogonal = [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
        return pairing(a.first, b.first) == 0 && pairing(a.first, b.second) == 0 && pairing(a.second, b.first) == 0 &&
               pairing(a.second, b.second) == 0;
    };
    std::vector<std::vector<int>> words;
    std::vector<int> current;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == g) return;
        for (int x = 0; x < static_cast<int>(letters.size()); ++x) {
            bool ok = true;
            for (int c : current)
                if (!orthogonal(letters[static_cast<std::size_t>(c)], letters[static_cast<std::size_t>(x)])) ok = false;
            if (!ok) continue;
            current.push_back(x);
            words.push_back(current);
            self(self);
            current.pop_back();
        }
    };
    extend(extend);
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    SequencePoset out;
    std::vector<std::string> labels;
    for (const auto& w : words) {
        std::vector<int> rows;
        for (int x : w) {
            rows.push_back(letters[static_cast<std::size_t>(x)].first);
            rows.push_back(letters[static_cast<std::size_t>(x)].second);
        }
        out.sequences.push_back(select_rows(vecs, rows));
        labels.push_back(sequence_text(ring, out.sequences.back()));
    }
    out.poset = subword_poset(words, std::move(labels));
    return out;
}

Decomposition hu_decomposition(const SymplecticModule& l, const IntMatrix& pairs) {
    const auto& r = l.ring();
    std::vector<Submodule> parts;
    for (Eigen::Index i = 0; i < pairs.rows(); i += 2) parts.push_back(Submodule::span(r, l.rank(), pairs.middleRows(i, 2)));
    const Submodule rest = perp(l, Submodule::span(r, l.rank(), pairs));
    if (rest.rank() > 0) parts.push_back(rest);
    return make_decomposition(std::move(parts));
}

HUDecompositionMap hu_decomposition_map(int g, const ScalarRing& ring) {
    if (g < 2) throw SymplecticError("the map HU_g -> D_+ needs g >= 2");
    auto l = SymplecticModule::standard(ring, g);
    auto source = build_HU(g, ring);
    auto target = std::make_shared<DecompositionPoset>(build_D(l, true));
    std::vector<Index> assignment;
    for (const auto& s : source.sequences) {
        const Index t = target->find(hu_decomposition(l, s));
        if (t < 0) throw SymplecticError("split sequence does not give a strict decomposition");
        assignment.push_back(t);
    }
    auto sp = std::make_shared<const FinitePoset>(source.poset);
    std::shared_ptr<const FinitePoset> tp(target, &target->poset);
    PosetMap map(sp, tp, std::move(assignment));
    return HUDecompositionMap{std::move(l), std::move(source), std::move(target), std::move(map)};
}

int genus_one_count(const Decomposition& u) {
    return static_cast<int>(std::count_if(u.begin(), u.end(), [](const Submodule& s) { return s.rank() == 2; }));
}

int higher_genus_count(const Decomposition& u) {
    return static_cast<int>(std::count_if(u.begin(), u.end(), [](const Submodule& s) { return s.rank() > 2; }));
}

FinitePoset partition_sequences_poset(const std::vector<int>& part_of) {
    const int n = static_cast<int>(part_of.size());
    std::vector<std::vector<int>> words;
    std::vector<int> current;
    auto extend = [&](auto&& self) -> void {
        for (int a = 0; a < n; ++a) {
            const bool clash = std::any_of(current.begin(), current.end(), [&](int c) {
                return part_of[static_cast<std::size_t>(c)] == part_of[static_cast<std::size_t>(a)];
            });
            if (clash) continue;
            current.push_back(a);
            words.push_back(current);
            self(self);
            current.pop_back();
        }
    };
    extend(extend);
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::string> labels;
    for (const auto& w : words) {
        std::string l = "(";
        for (std::size_t i = 0; i < w.size(); ++i) l += (i ? "," : "") + std::to_string(w[i]);
        labels.push_back(l + ")");
    }
    return subword_poset(words, std::move(labels));
}

std::vector<int> parts_from_sizes(const std::vector<int>& sizes) {
    std::vector<int> out;
    for (std::size_t p = 0; p < sizes.size(); ++p)
        for (int k = 0; k < sizes[p]; ++k) out.push_back(static_cast<int>(p));
    return out;
}

int hu_connectivity_bound(int g) {
    const int a = g - 3;
    return a >= 0 ? a / 2 : -((-a + 1) / 2);
}

}  // namespace cmposet
