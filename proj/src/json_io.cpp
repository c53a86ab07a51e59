#include "sgm/json_io.hpp"

#include <stdexcept>

namespace sgm {

nlohmann::json graph_to_json(const StableGraph& g) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : g.vertices()) verts.push_back({{"genus", v.genus}, {"ext", v.ext}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
    return {{"vertices", verts}, {"edges", edges}};
}

StableGraph graph_from_json(const nlohmann::json& j) {
    std::vector<Vertex> verts;
    for (const auto& v : j.at("vertices"))
        verts.push_back({v.at("genus").get<int>(), v.at("ext").get<int>()});
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph_from_json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return StableGraph(std::move(verts), std::move(edges));
}

nlohmann::json catalog_to_json(const GraphCatalog& cat) {
    nlohmann::json graphs = nlohmann::json::array();
    nlohmann::json aut = nlohmann::json::array();
    for (int i = 0; i < cat.size(); ++i) {
        graphs.push_back(graph_to_json(cat.at(i).graph));
        aut.push_back(cat.at(i).aut.str());
    }
    return {{"graphs", graphs}, {"aut", aut}};
}

GraphCatalog catalog_from_json(int g, int n, const nlohmann::json& j) {
    const auto& graphs = j.at("graphs");
    const auto& aut = j.at("aut");
    if (graphs.size() != aut.size())
        throw std::invalid_argument("catalog_from_json: graphs/aut length mismatch");
    std::vector<CatalogEntry> entries;
    entries.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        StableGraph sg = graph_from_json(graphs[i]);
        CanonicalKey key = canonical_key(sg);
        entries.push_back({std::move(sg), std::move(key),
                           Int(aut[i].get<std::string>())});
    }
    return GraphCatalog::from_entries(g, n, std::move(entries));
}

nlohmann::json formal_sum_to_json(const FormalSum& sum) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : sum.terms())
        terms.push_back({{"key", key_hex(sum.catalog().at(idx).key)},
                         {"coeff", rat_to_string(c)}});
    return {{"g", sum.catalog().genus()}, {"n", sum.catalog().ext()}, {"terms", terms}};
}

nlohmann::json weight_to_json(const SymbolicWeight& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : w.terms()) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& [sym, power] : m.factors)
            for (int k = 0; k < power; ++k) fs.push_back({sym.g, sym.n});
        terms.push_back({{"kappa", m.kappa}, {"F", fs}, {"coeff", rat_to_string(c)}});
    }
    return {{"terms", terms}};
}

nlohmann::json euler_table_to_json(const EulerTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, value] : table.rows)
        rows.push_back({{"g", key.first},
                        {"n", key.second},
                        {"chi_open", rat_to_string(value.first)},
                        {"chi_closed", rat_to_string(value.second)}});
    return {{"max_chi", table.max_grade}, {"rows", rows}};
}

}  // namespace sgm
