#include "cmposet/utrees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cmposet/set_partitions.hpp"

namespace cmposet {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return false;
    const auto adj = adjacency(n, edges);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

// AHU encoding of the subtree at v; `tags` carries per-vertex text.
std::string encode(const std::vector<std::vector<int>>& adj, const std::vector<std::string>& tags, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) kids.push_back(encode(adj, tags, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + tags[static_cast<std::size_t>(v)];
    for (const auto& k : kids) out += k;
    return out + ")";
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (int s : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[static_cast<std::size_t>(s)] == 1) leaves.insert(s);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

// Calls fn on every labeled tree on n >= 2 vertices.
template <typename F>
void for_each_tree(int n, F&& fn) {
    if (n == 2) {
        fn(std::vector<std::pair<int, int>>{{0, 1}});
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        fn(prufer_decode(seq, n));
        std::size_t k = 0;
        while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
        if (k == seq.size()) return;
    }
}

std::string unlabeled_canonical(int n, const std::vector<std::pair<int, int>>& edges) {
    const auto adj = adjacency(n, edges);
    // centers: strip leaves layer by layer
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    const std::vector<std::string> tags(static_cast<std::size_t>(n));
    std::string best;
    for (int c : layer) {
        auto e = encode(adj, tags, c, -1);
        if (best.empty() || e < best) best = std::move(e);
    }
    return best;
}

std::vector<std::vector<int>> nonempty_subsets(int m) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

bool UTree::strict() const {
    std::vector<int> p = position;
    std::sort(p.begin(), p.end());
    return std::adjacent_find(p.begin(), p.end()) == p.end();
}

std::vector<int> UTree::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(vertex_count), 0);
    for (auto [a, b] : edges) {
        ++d[static_cast<std::size_t>(a)];
        ++d[static_cast<std::size_t>(b)];
    }
    return d;
}

std::vector<int> UTree::low_degree_vertices() const {
    std::vector<int> out;
    const auto d = degrees();
    for (int v = 0; v < vertex_count; ++v)
        if (d[static_cast<std::size_t>(v)] <= 2) out.push_back(v);
    return out;
}

std::string UTree::canonical() const {
    if (position.empty()) return unlabeled_canonical(vertex_count, edges);
    std::vector<std::vector<int>> at(static_cast<std::size_t>(vertex_count));
    for (int l = 0; l < label_count(); ++l) at[static_cast<std::size_t>(position[static_cast<std::size_t>(l)])].push_back(l);
    std::vector<std::string> tags;
    for (const auto& ls : at) {
        std::string t;
        for (std::size_t i = 0; i < ls.size(); ++i) t += (i ? "," : "") + std::to_string(ls[i]);
        tags.push_back(t);
    }
    return encode(adjacency(vertex_count, edges), tags, position[0], -1);
}

std::optional<std::string> utree_violation(const UTree& t) {
    if (t.edges.empty()) return "a tree needs at least one edge";
    if (t.vertex_count != t.edge_count() + 1) return "vertex count is not edge count + 1";
    for (auto [a, b] : t.edges)
        if (a < 0 || b >= t.vertex_count || a >= b) return "malformed edge";
    if (!connected(t.vertex_count, t.edges)) return "not connected";
    std::vector<bool> hit(static_cast<std::size_t>(t.vertex_count), false);
    for (int v : t.position) {
        if (v < 0 || v >= t.vertex_count) return "label outside the vertex set";
        hit[static_cast<std::size_t>(v)] = true;
    }
    for (int v : t.low_degree_vertices())
        if (!hit[static_cast<std::size_t>(v)]) return "unlabeled vertex of degree <= 2";
    return std::nullopt;
}

UTree contract(const UTree& t, const std::vector<int>& kept) {
    if (kept.empty()) throw std::invalid_argument("contraction needs a nonempty edge set");
    std::vector<bool> keep(t.edges.size(), false);
    for (int e : kept) keep.at(static_cast<std::size_t>(e)) = true;
    std::vector<int> parent(static_cast<std::size_t>(t.vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (std::size_t e = 0; e < t.edges.size(); ++e)
        if (!keep[e]) parent[static_cast<std::size_t>(root(t.edges[e].first))] = root(t.edges[e].second);
    std::map<int, int> renumber;
    auto image = [&](int v) { return renumber.emplace(root(v), static_cast<int>(renumber.size())).first->second; };
    UTree out;
    for (int v = 0; v < t.vertex_count; ++v) image(v);
    out.vertex_count = static_cast<int>(renumber.size());
    for (std::size_t e = 0; e < t.edges.size(); ++e)
        if (keep[e]) {
            const int a = image(t.edges[e].first);
            const int b = image(t.edges[e].second);
            out.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    for (int v : t.position) out.position.push_back(image(v));
    return out;
}

bool contraction_unique(const UTree& t, const std::vector<int>& e, const std::vector<int>& e_prime) {
    std::set<int> a(e.begin(), e.end());
    std::set<int> b(e_prime.begin(), e_prime.end());
    if (contract(t, e).canonical() != contract(t, e_prime).canonical()) return true;
    return a == b;
}

std::vector<UTree> enumerate_trees(int m, bool strict) {
    if (m < 2) throw std::invalid_argument("u-trees need at least two labels");
    std::map<std::string, UTree> found;
    for (const auto& blocks : all_set_partitions(m)) {
        const int b = block_count(blocks);
        if (b < 2 || (strict && b != m)) continue;
        for (int k = 0; k <= b - 2; ++k) {
            const int n = b + k;
            for_each_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
                UTree t{n, edges, blocks};
                const auto d = t.degrees();
                for (int v = b; v < n; ++v)
                    if (d[static_cast<std::size_t>(v)] < 3) return;
                auto key = t.canonical();
                found.emplace(std::move(key), std::move(t));
            });
        }
    }
    std::vector<std::pair<std::string, UTree>> sorted(found.begin(), found.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return x.second.edge_count() < y.second.edge_count(); });
    std::vector<UTree> out;
    for (auto& [key, t] : sorted) out.push_back(std::move(t));
    return out;
}

std::vector<UTree> trees_up_to(int max_edges) {
    std::vector<UTree> out;
    for (int n = 2; n <= max_edges + 1; ++n) {
        std::map<std::string, std::vector<std::pair<int, int>>> shapes;
        for_each_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
            shapes.emplace(unlabeled_canonical(n, edges), edges);
        });
        for (auto& [key, edges] : shapes) {
            UTree t{n, edges, {}};
            t.position = t.low_degree_vertices();
            out.push_back(std::move(t));
        }
    }
    return out;
}

bool is_rigid(const UTree& t) {
    std::vector<bool> labeled(static_cast<std::size_t>(t.vertex_count), false);
    for (int v : t.position) labeled[static_cast<std::size_t>(v)] = true;
    std::vector<int> free;
    for (int v = 0; v < t.vertex_count; ++v)
        if (!labeled[static_cast<std::size_t>(v)]) free.push_back(v);
    const std::set<std::pair<int, int>> edge_set(t.edges.begin(), t.edges.end());
    std::vector<int> perm = free;
    std::vector<int> map(static_cast<std::size_t>(t.vertex_count));
    do {
        if (perm == free) continue;
        std::iota(map.begin(), map.end(), 0);
        for (std::size_t i = 0; i < free.size(); ++i) map[static_cast<std::size_t>(free[i])] = perm[i];
        bool automorphism = true;
        for (auto [a, b] : t.edges) {
            const int x = map[static_cast<std::size_t>(a)];
            const int y = map[static_cast<std::size_t>(b)];
            if (!edge_set.count({std::min(x, y), std::max(x, y)})) automorphism = false;
        }
        if (automorphism) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

TreePoset build_T(int m) {
    TreePoset out;
    out.trees = enumerate_trees(m, false);
    std::map<std::string, Index> index;
    std::vector<std::string> labels;
    std::vector<int> height;
    for (std::size_t i = 0; i < out.trees.size(); ++i) {
        labels.push_back(out.trees[i].canonical());
        index.emplace(labels.back(), static_cast<Index>(i));
        height.push_back(out.trees[i].edge_count() - 1);
    }
    std::vector<Relation> rel;
    for (std::size_t i = 0; i < out.trees.size(); ++i) {
        const auto& t = out.trees[i];
        for (const auto& e : nonempty_subsets(t.edge_count())) {
            if (static_cast<int>(e.size()) == t.edge_count()) continue;
            rel.emplace_back(index.at(contract(t, e).canonical()), static_cast<Index>(i));
        }
    }
    out.poset = FinitePoset::from_relations(std::move(labels), rel, std::move(height));
    return out;
}

TreeDecompositionPoset build_TD(const SymplecticModule& l) {
    TreeDecompositionPoset out;
    auto dplus = std::make_shared<DecompositionPoset>(build_D(l, true));
    out.dplus = dplus;
    std::map<int, std::vector<UTree>> strict_trees;
    std::map<std::string, Index> index;
    std::vector<std::string> labels;
    std::vector<int> height;
    for (Index d = 0; d < dplus->poset.size(); ++d) {
        const int m = static_cast<int>(dplus->elements[static_cast<std::size_t>(d)].size());
        auto it = strict_trees.find(m);
        if (it == strict_trees.end()) it = strict_trees.emplace(m, enumerate_trees(m, true)).first;
        for (const auto& t : it->second) {
            labels.push_back(dplus->poset.label(d) + "#" + t.canonical());
            index.emplace(labels.back(), static_cast<Index>(out.trees.size()));
            height.push_back(t.edge_count() - 1);
            out.decomposition.push_back(d);
            out.trees.push_back(t);
        }
    }
    std::vector<Relation> rel;
    for (std::size_t i = 0; i < out.trees.size(); ++i) {
        const auto& t = out.trees[i];
        const auto& members = dplus->elements[static_cast<std::size_t>(out.decomposition[i])];
        for (const auto& e : nonempty_subsets(t.edge_count())) {
            const UTree c = contract(t, e);
            // members meeting at one vertex of T^E merge into one member
            std::vector<std::vector<int>> at(static_cast<std::size_t>(c.vertex_count));
            for (int lbl = 0; lbl < c.label_count(); ++lbl)
                at[static_cast<std::size_t>(c.position[static_cast<std::size_t>(lbl)])].push_back(lbl);
            std::vector<std::pair<Submodule, int>> merged;
            for (int v = 0; v < c.vertex_count; ++v) {
                const auto& ls = at[static_cast<std::size_t>(v)];
                if (ls.empty()) continue;
                Submodule s = members[static_cast<std::size_t>(ls[0])];
                for (std::size_t k = 1; k < ls.size(); ++k) s = sum(s, members[static_cast<std::size_t>(ls[k])]);
                merged.emplace_back(std::move(s), v);
            }
            std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            Decomposition coarse;
            UTree image{c.vertex_count, c.edges, {}};
            for (auto& [s, v] : merged) {
                coarse.push_back(s);
                image.position.push_back(v);
            }
            const Index target = dplus->find(coarse);
            if (target < 0) throw SymplecticError("contracted tree decomposition is not in D_+(L)");
            const auto key = dplus->poset.label(target) + "#" + image.canonical();
            const Index j = index.at(key);
            if (j != static_cast<Index>(i)) rel.emplace_back(j, static_cast<Index>(i));
        }
    }
    out.poset = FinitePoset::from_relations(std::move(labels), rel, std::move(height));
    return out;
}

PosetMap tree_forget_map(const TreeDecompositionPoset& td) {
    auto source = std::make_shared<const FinitePoset>(td.poset);
    std::shared_ptr<const FinitePoset> target(td.dplus, &td.dplus->poset);
    return PosetMap(source, target, td.decomposition);
}

}  // namespace cmposet
