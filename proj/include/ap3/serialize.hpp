#pragma once

#include <string>

#include <json.hpp>

#include "ap3/poset.hpp"
#include "ap3/tableau.hpp"
#include "ap3/triples.hpp"

namespace ap3 {

/// {"n": 4, "triples": [[1,2,3],[1,3,4]]}
nlohmann::json to_json(const TripleSystem& s);
/// DomainError on malformed input.
TripleSystem triple_system_from_json(const nlohmann::json& j);

/// {"size": N, "covers": [[a,b],...], "labels": [...]}
nlohmann::json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const nlohmann::json& j);

/// {"shape": [row lengths], "rows": [[...], ...]}
nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

/// Hasse diagram in Graphviz DOT, bottom to top, elements of equal rank
/// (longest chain from a minimal element) on the same layer.
std::string to_dot(const FinitePoset& p, const std::string& name = "hasse");

}  // namespace ap3
