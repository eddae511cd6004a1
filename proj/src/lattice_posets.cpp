#include "cmposet/lattice_posets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "cmposet/parallel.hpp"
#include "cmposet/sequences.hpp"

namespace cmposet {

Index SubmodulePoset::find(const Submodule& s) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || !(*it == s)) return -1;
    return static_cast<Index>(it - elements.begin());
}

namespace {

void require_field(const SymplecticModule& l, const char* what) {
    if (!l.ring().enumerable()) throw SymplecticError(std::string(what) + " needs a finite field, got " + l.ring().name());
}

SubmodulePoset inclusion_poset(std::vector<Submodule> elements, unsigned workers) {
    const auto n = elements.size();
    std::vector<std::vector<Relation>> rows(n);
    parallel_for(n, workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j)
            if (elements[i].rank() < elements[j].rank() && elements[j].contains(elements[i]))
                rows[i].emplace_back(static_cast<Index>(i), static_cast<Index>(j));
    });
    std::vector<Relation> rel;
    for (auto& r : rows) rel.insert(rel.end(), r.begin(), r.end());
    std::vector<std::string> labels;
    std::vector<int> height;
    for (const auto& s : elements) {
        labels.push_back(s.key());
        height.push_back(s.rank() / 2);
    }
    return SubmodulePoset{FinitePoset::from_relations(std::move(labels), rel, std::move(height)), std::move(elements)};
}

}  // namespace

SubmodulePoset build_U(const SymplecticModule& l, unsigned workers) {
    require_field(l, "U(L)");
    return inclusion_poset(enumerate_unimodular_submodules(l, workers), workers);
}

SubmodulePoset build_U_within(const SymplecticModule& l, const Submodule& s, unsigned workers) {
    require_field(l, "U(L)");
    const auto& r = l.ring();
    const SymplecticModule inner(r, l.gram_of(s.basis()));
    std::vector<Submodule> out;
    for (const auto& u : enumerate_unimodular_submodules(inner, workers))
        out.push_back(Submodule::span(r, l.rank(), multiply(r, u.basis(), s.basis())));
    std::sort(out.begin(), out.end());
    return inclusion_poset(std::move(out), workers);
}

SequencePoset build_I(const SymplecticModule& l) {
    require_field(l, "I(L)");
    const auto& r = l.ring();
    const IntMatrix vecs = all_vectors(r, l.rank());
    const IntMatrix pairing = l.pairing(vecs, vecs);
    const IntMatrix rad = radical(l).basis();
    const auto rad_rank = static_cast<std::size_t>(rad.rows());
    const int g = l.genus();

    std::vector<std::vector<int>> words;
    std::vector<int> current;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == g) return;
        for (int v = 0; v < vecs.rows(); ++v) {
            bool ok = true;
            for (int c : current)
                if (pairing(c, v) != 0) ok = false;
            if (!ok) continue;
            IntMatrix stacked(static_cast<Eigen::Index>(current.size()) + 1 + rad.rows(), l.rank());
            Eigen::Index row = 0;
            for (int c : current) stacked.row(row++) = vecs.row(c);
            stacked.row(row++) = vecs.row(v);
            for (Eigen::Index k = 0; k < rad.rows(); ++k) stacked.row(row++) = rad.row(k);
            if (rank(r, stacked) != current.size() + 1 + rad_rank) continue;
            current.push_back(v);
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
        out.sequences.push_back(select_rows(vecs, w));
        labels.push_back(sequence_text(r, out.sequences.back()));
    }
    out.poset = subword_poset(words, std::move(labels));
    return out;
}

std::string decomposition_key(const Decomposition& d) {
    std::string out = "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) out += "|";
        out += d[i].key();
    }
    return out + "}";
}

Decomposition make_decomposition(std::vector<Submodule> members) {
    std::sort(members.begin(), members.end());
    return members;
}

bool is_decomposition(const SymplecticModule& l, const Decomposition& d) {
    if (d.empty()) return false;
    int total = 0;
    IntMatrix stacked(0, l.rank());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto t = unimodular_test(l, d[i]);
        if (!t.unimodular || t.genus == 0) return false;
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (!l.pairing(d[i].basis(), d[j].basis()).isZero()) return false;
        total += d[i].rank();
        IntMatrix next(stacked.rows() + d[i].basis().rows(), l.rank());
        next << stacked, d[i].basis();
        stacked = std::move(next);
    }
    if (total != l.rank()) return false;
    return Submodule::span(l.ring(), l.rank(), stacked) == Submodule::whole(l.ring(), l.rank());
}

bool refines(const Decomposition& fine, const Decomposition& coarse) {
    for (const auto& m : fine)
        if (std::none_of(coarse.begin(), coarse.end(), [&](const Submodule& c) { return c.contains(m); })) return false;
    return true;
}

Index DecompositionPoset::find(const Decomposition& d) const {
    auto i = poset.find(decomposition_key(d));
    return i ? *i : -1;
}

DecompositionPoset build_D(const SymplecticModule& l, bool strict) {
    require_field(l, "D(L)");
    if (!l.unimodular() || l.genus() == 0) throw SymplecticError("D(L) needs a unimodular L of positive genus");
    const auto& r = l.ring();
    std::vector<Submodule> members;
    for (auto& s : enumerate_unimodular_submodules(l)) {
        if (s.rank() > 0) members.push_back(std::move(s));
    }
    const auto m = members.size();
    std::unordered_map<Submodule, int, SubmoduleHash> index;
    for (std::size_t i = 0; i < m; ++i) index.emplace(members[i], static_cast<int>(i));
    // inside[i][j]: members[i] is contained in members[j]
    std::vector<std::vector<bool>> inside(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            inside[i][j] = i == j || (members[i].rank() < members[j].rank() && members[j].contains(members[i]));

    // decompositions of members[w], as sorted index lists
    std::map<int, std::set<std::vector<int>>> memo;
    auto decompose = [&](auto&& self, int w) -> const std::set<std::vector<int>>& {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        std::set<std::vector<int>> out;
        out.insert({w});
        for (std::size_t u = 0; u < m; ++u) {
            if (static_cast<int>(u) == w || !inside[u][static_cast<std::size_t>(w)]) continue;
            const Submodule rest = intersect(members[static_cast<std::size_t>(w)], perp(l, members[u]));
            const int ri = index.at(rest);
            for (const auto& d : self(self, ri)) {
                std::vector<int> e = d;
                e.push_back(static_cast<int>(u));
                std::sort(e.begin(), e.end());
                out.insert(std::move(e));
            }
        }
        return memo.emplace(w, std::move(out)).first->second;
    };
    const int whole = index.at(Submodule::whole(r, l.rank()));
    std::vector<std::vector<int>> found(decompose(decompose, whole).begin(), decompose(decompose, whole).end());
    if (strict) std::erase_if(found, [](const auto& d) { return d.size() < 2; });
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    DecompositionPoset out;
    std::vector<std::string> labels;
    std::vector<int> height;
    for (const auto& d : found) {
        Decomposition dec;
        for (int i : d) dec.push_back(members[static_cast<std::size_t>(i)]);
        labels.push_back(decomposition_key(dec));
        height.push_back(static_cast<int>(d.size()) - 1);
        out.elements.push_back(std::move(dec));
    }
    std::vector<Relation> rel;
    for (std::size_t a = 0; a < found.size(); ++a)
        for (std::size_t b = 0; b < found.size(); ++b) {
            if (found[b].size() <= found[a].size()) continue;
            bool ok = true;
            for (int x : found[b])
                if (std::none_of(found[a].begin(), found[a].end(),
                                 [&](int y) { return inside[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }))
                    ok = false;
            if (ok) rel.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
        }
    out.poset = FinitePoset::from_relations(std::move(labels), rel, std::move(height));
    return out;
}

Decomposition flag_decomposition(const SymplecticModule& l, const std::vector<Submodule>& chain) {
    if (chain.empty()) throw SymplecticError("flag decomposition of an empty chain");
    std::vector<Submodule> parts{chain.front()};
    for (std::size_t i = 1; i < chain.size(); ++i) parts.push_back(intersect(chain[i], perp(l, chain[i - 1])));
    const Submodule whole = Submodule::whole(l.ring(), l.rank());
    if (!(chain.back() == whole)) parts.push_back(perp(l, chain.back()));
    return make_decomposition(std::move(parts));
}

FlagMap flag_to_decomposition(const SymplecticModule& l, unsigned workers) {
    auto target = std::make_shared<DecompositionPoset>(build_D(l, false));
    auto all = build_U(l, workers);
    std::vector<Index> keep;
    for (Index i = 0; i < all.poset.size(); ++i)
        if (all.elements[static_cast<std::size_t>(i)].rank() > 0) keep.push_back(i);
    SubmodulePoset positive{all.poset.induced(keep), {}};
    for (Index i : keep) positive.elements.push_back(all.elements[static_cast<std::size_t>(i)]);
    auto chains = barycentric_subdivision_chains(positive.poset);

    std::vector<Index> assignment(chains.chains.size());
    parallel_for(chains.chains.size(), workers, [&](std::size_t c) {
        std::vector<Submodule> flag;
        for (Index e : chains.chains[c]) flag.push_back(positive.elements[static_cast<std::size_t>(e)]);
        const Index t = target->find(flag_decomposition(l, flag));
        if (t < 0) throw SymplecticError("flag decomposition is not in D(L)");
        assignment[c] = t;
    });
    auto source = std::make_shared<const FinitePoset>(chains.poset);
    std::shared_ptr<const FinitePoset> tp(target, &target->poset);
    PosetMap map(source, tp, std::move(assignment));
    return FlagMap{std::move(positive), std::move(chains), std::move(target), std::move(map)};
}

}  // namespace cmposet
