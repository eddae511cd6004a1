#include "cmposet/set_partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace cmposet {

int block_count(const SetPartition& p) { return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1; }

std::string partition_text(const SetPartition& p) {
    std::string out = "{";
    for (int b = 0; b < block_count(p); ++b) {
        if (b > 0) out += "|";
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == b) {
                if (!first) out += " ";
                out += std::to_string(i);
                first = false;
            }
    }
    return out + "}";
}

bool partition_refines(const SetPartition& fine, const SetPartition& coarse) {
    std::vector<int> image(static_cast<std::size_t>(block_count(fine)), -1);
    for (std::size_t i = 0; i < fine.size(); ++i) {
        int& im = image[static_cast<std::size_t>(fine[i])];
        if (im < 0) im = coarse[i];
        else if (im != coarse[i]) return false;
    }
    return true;
}

std::vector<SetPartition> all_set_partitions(int m) {
    std::vector<SetPartition> out;
    SetPartition current;
    auto grow = [&](auto&& self, int top) -> void {
        if (static_cast<int>(current.size()) == m) {
            out.push_back(current);
            return;
        }
        for (int b = 0; b <= top + 1; ++b) {
            current.push_back(b);
            self(self, std::max(top, b));
            current.pop_back();
        }
    };
    grow(grow, -1);
    return out;
}

Index PartitionPoset::find(const SetPartition& p) const {
    auto i = poset.find(partition_text(p));
    return i ? *i : -1;
}

PartitionPoset partitions_poset(int m, bool include_trivial, bool include_discrete) {
    if (m < 2) throw PosetError("set partitions need at least two points");
    PartitionPoset out;
    for (auto& p : all_set_partitions(m)) {
        const int b = block_count(p);
        if (b == 1 && !include_trivial) continue;
        if (b == m && !include_discrete) continue;
        out.partitions.push_back(std::move(p));
    }
    std::stable_sort(out.partitions.begin(), out.partitions.end(),
                     [](const auto& a, const auto& b) { return block_count(a) < block_count(b); });
    std::vector<std::string> labels;
    std::vector<int> height;
    for (const auto& p : out.partitions) {
        labels.push_back(partition_text(p));
        height.push_back(block_count(p) - 1);
    }
    std::vector<Relation> rel;
    const auto n = out.partitions.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (block_count(out.partitions[a]) < block_count(out.partitions[b]) &&
                partition_refines(out.partitions[b], out.partitions[a]))
                rel.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
    out.poset = FinitePoset::from_relations(std::move(labels), rel, std::move(height));
    return out;
}

namespace {

// Renumbers blocks by first occurrence.
SetPartition normalize(const std::vector<int>& raw) {
    std::map<int, int> renumber;
    SetPartition out;
    for (int v : raw) out.push_back(renumber.emplace(v, static_cast<int>(renumber.size())).first->second);
    return out;
}

}  // namespace

GPlusMap g_plus_map(int m) {
    if (m < 2) throw PosetError("set partitions need at least two points");
    if (m > 20) throw PosetError("g_plus_map: set too large");
    const std::uint32_t full = (1u << m) - 1;
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < full; ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::string> labels;
    std::vector<int> height;
    for (auto s : subsets) {
        std::string l;
        for (int i = 0; i < m; ++i) l += (s >> i & 1u) ? '1' : '0';
        labels.push_back(l);
        height.push_back(std::popcount(s) - 1);
    }
    std::vector<Relation> rel;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b)
            if (a != b && (subsets[a] & subsets[b]) == subsets[a])
                rel.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
    FinitePoset f = FinitePoset::from_relations(std::move(labels), rel, std::move(height));
    auto nested = barycentric_subdivision_chains(f);
    auto target = std::make_shared<PartitionPoset>(partitions_poset(m));

    std::vector<Index> assignment;
    for (const auto& chain : nested.chains) {
        std::vector<int> raw(static_cast<std::size_t>(m), static_cast<int>(chain.size()));
        for (std::size_t k = chain.size(); k-- > 0;) {
            const auto s = subsets[static_cast<std::size_t>(chain[k])];
            for (int i = 0; i < m; ++i)
                if (s >> i & 1u) raw[static_cast<std::size_t>(i)] = static_cast<int>(k);
        }
        const Index t = target->find(normalize(raw));
        if (t < 0) throw PosetError("g_plus: partition not found");
        assignment.push_back(t);
    }
    auto source = std::make_shared<const FinitePoset>(nested.poset);
    std::shared_ptr<const FinitePoset> tp(target, &target->poset);
    PosetMap map(source, tp, std::move(assignment));
    return GPlusMap{std::move(f), std::move(subsets), std::move(nested), std::move(target), std::move(map)};
}

FinitePoset partition_product_upper(const SetPartition& y) {
    std::vector<int> sizes(static_cast<std::size_t>(block_count(y)), 0);
    for (int b : y) ++sizes[static_cast<std::size_t>(b)];
    // the factor D(Y_i) is the poset of all partitions of Y_i; singletons give one point
    std::vector<std::vector<SetPartition>> factors;
    for (int s : sizes) factors.push_back(all_set_partitions(s));
    std::vector<std::vector<std::size_t>> tuples{{}};
    for (const auto& f : factors) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : tuples)
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }
    auto is_min = [&](const std::vector<std::size_t>& t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            if (block_count(factors[i][t[i]]) != 1) return false;
        return true;
    };
    std::erase_if(tuples, is_min);
    std::vector<std::string> labels;
    for (const auto& t : tuples) {
        std::string l;
        for (std::size_t i = 0; i < t.size(); ++i) l += partition_text(factors[i][t[i]]);
        labels.push_back(l);
    }
    std::vector<Relation> rel;
    for (std::size_t a = 0; a < tuples.size(); ++a)
        for (std::size_t b = 0; b < tuples.size(); ++b) {
            if (a == b) continue;
            bool ok = true;
            for (std::size_t i = 0; i < factors.size() && ok; ++i)
                ok = partition_refines(factors[i][tuples[b][i]], factors[i][tuples[a][i]]);
            if (ok) rel.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
        }
    return FinitePoset::from_relations(std::move(labels), rel);
}

}  // namespace cmposet
