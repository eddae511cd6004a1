#include "cmposet/poset_io.hpp"

#include <sstream>

namespace cmposet {

std::string write_text(const FinitePoset& p) {
    std::ostringstream out;
    out << "poset " << p.size() << '\n';
    for (Index i = 0; i < p.size(); ++i) {
        const auto& label = p.label(i);
        if (label.find_first_of("\t\n") != std::string::npos)
            throw FormatError("label contains a tab or newline: " + label);
        out << label << '\t';
        if (p.has_height()) out << p.height(i);
        else out << '-';
        out << '\n';
    }
    const auto edges = p.hasse_edges();
    out << "hasse " << edges.size() << '\n';
    for (auto [a, b] : edges) out << a << ' ' << b << '\n';
    return out.str();
}

FinitePoset read_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto fail = [](const std::string& what) -> FinitePoset { throw FormatError("poset text: " + what); };
    if (!std::getline(in, line) || line.rfind("poset ", 0) != 0) return fail("missing header");
    long n = -1;
    try {
        n = std::stol(line.substr(6));
    } catch (const std::exception&) {
        return fail("bad element count");
    }
    if (n < 0) return fail("negative element count");
    std::vector<std::string> labels;
    std::vector<int> heights;
    bool any_height = false;
    bool no_height = false;
    for (long i = 0; i < n; ++i) {
        if (!std::getline(in, line)) return fail("truncated element list");
        const auto tab = line.rfind('\t');
        if (tab == std::string::npos) return fail("element line without height field");
        labels.push_back(line.substr(0, tab));
        const auto h = line.substr(tab + 1);
        if (h == "-") {
            no_height = true;
            heights.push_back(0);
        } else {
            try {
                std::size_t used = 0;
                heights.push_back(std::stoi(h, &used));
                if (used != h.size()) return fail("bad height " + h);
            } catch (const std::exception&) {
                return fail("bad height " + h);
            }
            any_height = true;
        }
    }
    if (any_height && no_height) return fail("heights given for some elements only");
    if (!std::getline(in, line) || line.rfind("hasse ", 0) != 0) return fail("missing hasse header");
    long m = -1;
    try {
        m = std::stol(line.substr(6));
    } catch (const std::exception&) {
        return fail("bad edge count");
    }
    std::vector<Relation> edges;
    for (long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) return fail("truncated edge list");
        std::istringstream e(line);
        long a = -1;
        long b = -1;
        if (!(e >> a >> b) || a < 0 || b < 0 || a >= n || b >= n) return fail("bad edge '" + line + "'");
        edges.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
    }
    std::string rest;
    while (std::getline(in, rest))
        if (!rest.empty()) return fail("trailing data");
    try {
        if (any_height) return FinitePoset::from_relations(std::move(labels), edges, std::move(heights));
        return FinitePoset::from_relations(std::move(labels), edges);
    } catch (const PosetError& e) {
        return fail(e.what());
    }
}

nlohmann::json to_json(const FinitePoset& p) {
    nlohmann::json j;
    j["size"] = p.size();
    j["dimension"] = p.dimension();
    auto& elements = j["elements"] = nlohmann::json::array();
    for (Index i = 0; i < p.size(); ++i) {
        nlohmann::json e{{"label", p.label(i)}};
        if (p.has_height()) e["height"] = p.height(i);
        elements.push_back(std::move(e));
    }
    auto& hasse = j["hasse"] = nlohmann::json::array();
    for (auto [a, b] : p.hasse_edges()) hasse.push_back({a, b});
    return j;
}

FinitePoset poset_from_json(const nlohmann::json& j) {
    try {
        std::vector<std::string> labels;
        std::vector<int> heights;
        bool with_height = false;
        for (const auto& e : j.at("elements")) {
            labels.push_back(e.at("label").get<std::string>());
            if (e.contains("height")) {
                with_height = true;
                heights.push_back(e.at("height").get<int>());
            }
        }
        if (with_height && heights.size() != labels.size()) throw FormatError("heights given for some elements only");
        std::vector<Relation> edges;
        for (const auto& e : j.at("hasse")) edges.emplace_back(e.at(0).get<Index>(), e.at(1).get<Index>());
        for (auto [a, b] : edges)
            if (a < 0 || b < 0 || a >= static_cast<Index>(labels.size()) || b >= static_cast<Index>(labels.size()))
                throw FormatError("edge index out of range");
        if (with_height) return FinitePoset::from_relations(std::move(labels), edges, std::move(heights));
        return FinitePoset::from_relations(std::move(labels), edges);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("poset json: ") + e.what());
    } catch (const PosetError& e) {
        throw FormatError(std::string("poset json: ") + e.what());
    }
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string write_dot(const FinitePoset& p, std::size_t max_elements) {
    if (static_cast<std::size_t>(p.size()) > max_elements)
        throw FormatError("poset has " + std::to_string(p.size()) + " elements; dot export is limited to " +
                          std::to_string(max_elements));
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (Index i = 0; i < p.size(); ++i) out << "  n" << i << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
    for (auto [a, b] : p.hasse_edges()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
    out << "}\n";
    return out.str();
}

std::string write_triplets(const SparseIntMatrix& m) {
    std::ostringstream out;
    out << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
    for (std::int32_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[static_cast<std::size_t>(c)]) out << e.row << ' ' << c << ' ' << e.value << '\n';
    return out.str();
}

SparseIntMatrix read_triplets(const std::string& text) {
    std::istringstream in(text);
    std::int32_t rows = -1;
    std::int32_t cols = -1;
    std::size_t nnz = 0;
    if (!(in >> rows >> cols >> nnz) || rows < 0 || cols < 0) throw FormatError("triplets: bad header");
    SparseIntMatrix m(rows, cols);
    for (std::size_t i = 0; i < nnz; ++i) {
        std::int32_t r = -1;
        std::int32_t c = -1;
        std::int64_t v = 0;
        if (!(in >> r >> c >> v) || r < 0 || r >= rows || c < 0 || c >= cols)
            throw FormatError("triplets: bad entry " + std::to_string(i));
        m.columns[static_cast<std::size_t>(c)].push_back({r, v});
    }
    return m;
}

std::string write_complex(const OrderComplex& k) {
    std::ostringstream out;
    for (int d = 0; d <= k.dimension(); ++d) out << "# boundary " << d << '\n' << write_triplets(k.boundary(d));
    return out.str();
}

nlohmann::json to_json(const HomologyProfile& h) {
    nlohmann::json j;
    j["first_degree"] = h.first_degree;
    j["computed_through"] = h.computed_through;
    j["complete"] = h.complete;
    auto& degrees = j["degrees"] = nlohmann::json::array();
    for (std::size_t i = 0; i < h.betti.size(); ++i) {
        nlohmann::json t = nlohmann::json::array();
        if (i < h.torsion.size())
            for (const auto& c : h.torsion[i]) t.push_back(c.str());
        degrees.push_back({{"degree", h.first_degree + static_cast<int>(i)}, {"betti", h.betti[i]}, {"torsion", t}});
    }
    return j;
}

nlohmann::json to_json(const ConnectivityVerdict& v) {
    nlohmann::json j{{"level", v.level}, {"status", to_string(v.status)}, {"basis", to_string(v.basis)}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.homology) j["homology"] = to_json(*v.homology);
    if (v.pi1) j["pi1"] = {{"status", to_string(v.pi1->status)}, {"detail", v.pi1->detail}};
    return j;
}

nlohmann::json to_json(const CohenMacaulayReport& r) {
    nlohmann::json j{{"dimension", r.dimension}, {"status", to_string(r.status)}};
    j["checks"] = r.checks.size();
    auto& failures = j["failures"] = nlohmann::json::array();
    for (const auto* c : r.failures())
        failures.push_back({{"kind", to_string(c->kind)},
                            {"x", c->x},
                            {"y", c->y},
                            {"expected_dimension", c->expected_dimension},
                            {"verdict", to_json(c->verdict)}});
    return j;
}

}  // namespace cmposet
