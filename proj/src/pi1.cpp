#include "cmposet/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <queue>

namespace cmposet {

const char* to_string(Pi1Status s) {
    switch (s) {
        case Pi1Status::trivial: return "trivial";
        case Pi1Status::nontrivial: return "nontrivial";
        case Pi1Status::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using Word = std::vector<int>;

void free_reduce(Word& w) {
    std::size_t n = 0;
    for (int x : w) {
        if (n > 0 && w[n - 1] == -x)
            --n;
        else
            w[n++] = x;
    }
    w.resize(n);
}

void cyclic_reduce(Word& w) {
    free_reduce(w);
    std::size_t lo = 0;
    std::size_t hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    w = Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

std::size_t gen_of(int letter) { return static_cast<std::size_t>(std::abs(letter) - 1); }

}  // namespace

Presentation edge_path_presentation(const OrderComplex& k) {
    Presentation out;
    const auto n = static_cast<std::size_t>(k.vertex_count());
    const std::size_t edges = k.count(1);
    std::vector<std::vector<std::pair<Index, std::size_t>>> adj(n);
    for (std::size_t e = 0; e < edges; ++e) {
        auto s = k.simplex(1, e);
        adj[static_cast<std::size_t>(s[0])].emplace_back(s[1], e);
        adj[static_cast<std::size_t>(s[1])].emplace_back(s[0], e);
    }
    std::vector<bool> in_tree(edges, false);
    std::vector<bool> seen(n, false);
    std::deque<Index> queue;
    if (n > 0) {
        seen[0] = true;
        queue.push_back(0);
    }
    while (!queue.empty()) {
        const Index v = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            in_tree[e] = true;
            queue.push_back(w);
        }
    }
    std::vector<int> letter(edges, 0);
    for (std::size_t e = 0; e < edges; ++e)
        if (!in_tree[e]) letter[e] = static_cast<int>(++out.generator_count);
    std::vector<Index> face(2);
    auto edge_letter = [&](Index a, Index b) {
        face[0] = a;
        face[1] = b;
        return letter[*k.find(face)];
    };
    for (std::size_t t = 0; t < k.count(2); ++t) {
        auto s = k.simplex(2, t);
        Word w;
        for (int x : {edge_letter(s[0], s[1]), edge_letter(s[1], s[2]), -edge_letter(s[0], s[2])})
            if (x != 0) w.push_back(x);
        cyclic_reduce(w);
        if (!w.empty()) out.relators.push_back(std::move(w));
    }
    return out;
}

Presentation simplify(Presentation p, const Pi1Limits& limits) {
    auto& rels = p.relators;
    for (auto& r : rels) cyclic_reduce(r);
    std::vector<bool> alive(rels.size(), true);
    std::vector<std::vector<std::size_t>> occ(p.generator_count);
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (int x : rels[i]) occ[gen_of(x)].push_back(i);
    std::vector<bool> gone(p.generator_count, false);

    using Item = std::pair<std::size_t, std::size_t>;  // (length, relator)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> work;
    for (std::size_t i = 0; i < rels.size(); ++i) work.emplace(rels[i].size(), i);

    std::vector<int> count(p.generator_count, 0);
    while (!work.empty()) {
        auto [len, r] = work.top();
        work.pop();
        if (!alive[r] || rels[r].size() != len) continue;
        if (rels[r].empty()) {
            alive[r] = false;
            continue;
        }
        // generator occurring exactly once, cheapest to substitute
        for (int x : rels[r]) ++count[gen_of(x)];
        std::size_t best = SIZE_MAX;
        std::size_t best_cost = SIZE_MAX;
        for (int x : rels[r]) {
            const auto g = gen_of(x);
            if (count[g] != 1) continue;
            const std::size_t cost = occ[g].size() * (rels[r].size() - 1);
            if (cost < best_cost) {
                best_cost = cost;
                best = g;
            }
        }
        for (int x : rels[r]) count[gen_of(x)] = 0;
        if (best == SIZE_MAX || best_cost > limits.max_substitution) continue;

        // rotate so the generator comes first: x^e W = 1, hence x^e = W^{-1}
        Word w = rels[r];
        const auto pos = static_cast<std::size_t>(
            std::find_if(w.begin(), w.end(), [&](int x) { return gen_of(x) == best; }) - w.begin());
        std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
        const int head = w.front();
        Word rest(w.begin() + 1, w.end());
        const Word image = head > 0 ? inverse(rest) : rest;  // value of generator `best`
        const Word image_inv = inverse(image);
        alive[r] = false;
        gone[best] = true;

        auto targets = occ[best];
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (std::size_t s : targets) {
            if (!alive[s]) continue;
            Word out;
            bool touched = false;
            for (int x : rels[s]) {
                if (gen_of(x) == best) {
                    const Word& piece = x > 0 ? image : image_inv;
                    out.insert(out.end(), piece.begin(), piece.end());
                    touched = true;
                } else {
                    out.push_back(x);
                }
            }
            if (!touched) continue;
            cyclic_reduce(out);
            for (int x : out) occ[gen_of(x)].push_back(s);
            rels[s] = std::move(out);
            if (rels[s].empty())
                alive[s] = false;
            else
                work.emplace(rels[s].size(), s);
        }
        occ[best].clear();
    }

    // renumber surviving generators
    std::vector<int> renum(p.generator_count, 0);
    Presentation out;
    for (std::size_t g = 0; g < p.generator_count; ++g)
        if (!gone[g]) renum[g] = static_cast<int>(++out.generator_count);
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (!alive[i]) continue;
        Word w;
        for (int x : rels[i]) w.push_back(x > 0 ? renum[gen_of(x)] : -renum[gen_of(x)]);
        out.relators.push_back(std::move(w));
    }
    std::sort(out.relators.begin(), out.relators.end());
    out.relators.erase(std::unique(out.relators.begin(), out.relators.end()), out.relators.end());
    return out;
}

std::size_t todd_coxeter_order(const Presentation& p, std::size_t budget) {
    const std::size_t cols = 2 * p.generator_count;
    if (cols == 0) return 1;
    auto col_of = [](int letter) { return 2 * gen_of(letter) + (letter > 0 ? 0 : 1); };
    auto inv_col = [](std::size_t c) { return c ^ 1u; };
    std::vector<std::vector<std::size_t>> rels;
    for (const auto& r : p.relators) {
        std::vector<std::size_t> w;
        for (int x : r) w.push_back(col_of(x));
        rels.push_back(std::move(w));
    }
    constexpr long none = -1;
    std::vector<long> table;
    std::vector<long> parent;
    auto at = [&](long c, std::size_t col) -> long& { return table[static_cast<std::size_t>(c) * cols + col]; };
    bool over = false;
    auto define = [&](long c, std::size_t col) {
        if (parent.size() >= budget) {
            over = true;
            return;
        }
        const long d = static_cast<long>(parent.size());
        parent.push_back(d);
        table.resize(table.size() + cols, none);
        at(c, col) = d;
        at(d, inv_col(col)) = c;
    };
    auto rep = [&](long c) {
        long l = c;
        while (parent[static_cast<std::size_t>(l)] != l) l = parent[static_cast<std::size_t>(l)];
        while (parent[static_cast<std::size_t>(c)] != c) {
            const long next = parent[static_cast<std::size_t>(c)];
            parent[static_cast<std::size_t>(c)] = l;
            c = next;
        }
        return l;
    };
    auto coincidence = [&](long a, long b) {
        std::deque<long> queue;
        auto merge = [&](long k, long l) {
            k = rep(k);
            l = rep(l);
            if (k == l) return;
            if (k > l) std::swap(k, l);
            parent[static_cast<std::size_t>(l)] = k;
            queue.push_back(l);
        };
        merge(a, b);
        while (!queue.empty()) {
            const long e = queue.front();
            queue.pop_front();
            for (std::size_t col = 0; col < cols; ++col) {
                const long f = at(e, col);
                if (f == none) continue;
                if (at(f, inv_col(col)) == e) at(f, inv_col(col)) = none;
                const long e1 = rep(e);
                const long f1 = rep(f);
                if (at(e1, col) != none) {
                    merge(f1, at(e1, col));
                } else if (at(f1, inv_col(col)) != none) {
                    merge(e1, at(f1, inv_col(col)));
                } else {
                    at(e1, col) = f1;
                    at(f1, inv_col(col)) = e1;
                }
            }
        }
    };
    auto scan_and_fill = [&](long c, const std::vector<std::size_t>& w) {
        if (w.empty()) return;
        long f = c;
        long b = c;
        std::size_t i = 0;
        std::size_t j = w.size();  // unscanned letters are w[i..j)
        for (;;) {
            while (i < j && at(f, w[i]) != none) f = at(f, w[i++]);
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && at(b, inv_col(w[j - 1])) != none) b = at(b, inv_col(w[--j]));
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                at(f, w[i]) = b;
                at(b, inv_col(w[i])) = f;
                return;
            }
            define(f, w[i]);
            if (over) return;
        }
    };

    parent.push_back(0);
    table.assign(cols, none);
    for (long c = 0; c < static_cast<long>(parent.size()); ++c) {
        for (const auto& r : rels) {
            if (parent[static_cast<std::size_t>(c)] != c) break;
            scan_and_fill(c, r);
            if (over) return 0;
        }
        if (parent[static_cast<std::size_t>(c)] != c) continue;
        for (std::size_t col = 0; col < cols; ++col) {
            if (at(c, col) == none) define(c, col);
            if (over) return 0;
        }
    }
    std::size_t live = 0;
    for (std::size_t c = 0; c < parent.size(); ++c)
        if (parent[c] == static_cast<long>(c)) ++live;
    return live;
}

Pi1Result analyze(const Presentation& p, const Pi1Limits& limits) {
    Pi1Result out;
    out.generators = p.generator_count;
    out.relators = p.relators.size();
    if (p.generator_count == 0) {
        out.status = Pi1Status::trivial;
        out.detail = "presentation simplifies to the trivial group";
        return out;
    }
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(p.relators.size(), 1)),
                                  static_cast<Eigen::Index>(p.generator_count));
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int x : p.relators[i]) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(gen_of(x))) += x > 0 ? 1 : -1;
    const auto snf = smith_invariants_dense(m);
    if (snf.rank < p.generator_count || !snf.torsion.empty()) {
        out.status = Pi1Status::nontrivial;
        out.detail = "abelianization is nonzero";
        return out;
    }
    if (p.generator_count > limits.max_enumeration_generators) {
        out.detail = "perfect presentation too large for coset enumeration";
        return out;
    }
    const std::size_t order = todd_coxeter_order(p, limits.coset_budget);
    if (order == 0) {
        out.detail = "coset enumeration exceeded its budget";
    } else if (order == 1) {
        out.status = Pi1Status::trivial;
        out.detail = "coset enumeration gives the trivial group";
    } else {
        out.status = Pi1Status::nontrivial;
        out.detail = "coset enumeration gives a group of order " + std::to_string(order);
    }
    return out;
}

Pi1Result pi1_probe(const OrderComplex& k, const Pi1Limits& limits) {
    Pi1Result out;
    if (k.vertex_count() == 0) {
        out.detail = "empty complex";
        return out;
    }
    if (k.dimension() < 2 && k.truncated()) {
        out.detail = "complex enumerated below dimension 2";
        return out;
    }
    // connectivity: a spanning tree must reach every vertex
    std::vector<Index> root(static_cast<std::size_t>(k.vertex_count()));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Index v) {
        while (root[static_cast<std::size_t>(v)] != v) v = root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
        return v;
    };
    std::size_t components = static_cast<std::size_t>(k.vertex_count());
    for (std::size_t e = 0; e < k.count(1); ++e) {
        auto s = k.simplex(1, e);
        const Index a = find(s[0]);
        const Index b = find(s[1]);
        if (a != b) {
            root[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    if (components != 1) {
        out.detail = "complex is disconnected";
        return out;
    }
    return analyze(simplify(edge_path_presentation(k), limits), limits);
}

Pi1Result pi1_probe(const FinitePoset& p, std::size_t chain_budget, const Pi1Limits& limits) {
    return pi1_probe(OrderComplex(p, 2, chain_budget), limits);
}

}  // namespace cmposet
