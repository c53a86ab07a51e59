#pragma once

#include "sgm/catalog.hpp"
#include "sgm/euler.hpp"
#include "sgm/feynman.hpp"

#include <json.hpp>

namespace sgm {

// {"vertices":[{"genus":g,"ext":e},...],"edges":[[u,v],...]}
nlohmann::json graph_to_json(const StableGraph& g);
StableGraph graph_from_json(const nlohmann::json& j);

// {"graphs":[...],"aut":["1","2",...]} in catalog order
nlohmann::json catalog_to_json(const GraphCatalog& cat);
GraphCatalog catalog_from_json(int g, int n, const nlohmann::json& j);

// {"g":g,"n":n,"terms":[{"key":hex,"coeff":"p/q"},...]} sorted by index
nlohmann::json formal_sum_to_json(const FormalSum& sum);

// {"terms":[{"kappa":e,"F":[[g,n],...],"coeff":"p/q"},...]}
nlohmann::json weight_to_json(const SymbolicWeight& w);

nlohmann::json euler_table_to_json(const EulerTable& table);

}  // namespace sgm
