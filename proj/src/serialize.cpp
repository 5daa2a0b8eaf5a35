#include "ap3/serialize.hpp"

#include <map>
#include <sstream>

namespace ap3 {

using nlohmann::json;

json to_json(const TripleSystem& s) {
    json triples = json::array();
    for (const auto& t : s.triples()) triples.push_back({t.i(), t.j(), t.k()});
    return {{"n", s.n()}, {"triples", triples}};
}

TripleSystem triple_system_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Triple> ts;
        for (const auto& t : j.at("triples")) {
            if (t.size() != 3) throw DomainError("a triple needs three entries");
            ts.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), n);
        }
        return TripleSystem(n, std::move(ts));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed triple system: ") + e.what());
    }
}

json to_json(const FinitePoset& p) {
    json edges = json::array();
    for (const auto& [lo, hi] : covers(p)) edges.push_back({lo, hi});
    return {{"size", p.size()}, {"covers", edges}, {"labels", p.labels()}};
}

FinitePoset poset_from_json(const json& j) {
    try {
        const auto size = j.at("size").get<std::size_t>();
        std::vector<Cover> edges;
        for (const auto& e : j.at("covers")) {
            if (e.size() != 2) throw DomainError("a cover needs two endpoints");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return FinitePoset::from_covers(size, edges, std::move(labels));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed poset: ") + e.what());
    }
}

json to_json(const Tableau& t) { return {{"shape", t.shape().row_lengths()}, {"rows", t.rows()}}; }

Tableau tableau_from_json(const json& j) {
    try {
        Tableau t = Tableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>());
        if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().row_lengths())
            throw DomainError("tableau rows do not match the declared shape");
        return t;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed tableau: ") + e.what());
    }
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const FinitePoset& p, const std::string& name) {
    // Layer = length of the longest chain ending at the element.
    std::vector<std::size_t> layer(p.size(), 0);
    for (auto x : p.linear_extension())
        for (auto y : p.upper_covers(x)) layer[y] = std::max(layer[y], layer[x] + 1);
    std::map<std::size_t, std::vector<std::size_t>> by_layer;
    for (std::size_t x = 0; x < p.size(); ++x) by_layer[layer[x]].push_back(x);

    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t x = 0; x < p.size(); ++x) out << "  n" << x << " [label=" << quoted(p.label(x)) << "];\n";
    for (const auto& [r, xs] : by_layer) {
        out << "  { rank=same;";
        for (auto x : xs) out << " n" << x << ";";
        out << " }\n";
    }
    for (const auto& [lo, hi] : covers(p)) out << "  n" << lo << " -> n" << hi << " [dir=none];\n";
    out << "}\n";
    return out.str();
}

}  // namespace ap3
