#include "sgm/duality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgm {

namespace {

std::vector<std::string> name_tags(const LabeledStableGraph& g) {
    std::vector<std::string> tags(g.graph.num_vertices());
    for (int v = 0; v < g.graph.num_vertices(); ++v) {
        std::string t;
        for (int name : g.names[v]) {
            t += std::to_string(name);
            t += '.';
        }
        tags[v] = std::move(t);
    }
    return tags;
}

}  // namespace

LabeledStableGraph make_labeled(StableGraph g, std::vector<std::vector<int>> names) {
    if (static_cast<int>(names.size()) != g.num_vertices())
        throw std::invalid_argument("make_labeled: one name list per vertex required");
    std::vector<int> all;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<int>(names[v].size()) != g.vertices()[v].ext)
            throw std::invalid_argument("make_labeled: name count differs from leg count");
        std::sort(names[v].begin(), names[v].end());
        all.insert(all.end(), names[v].begin(), names[v].end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("make_labeled: duplicate leg name");
    return LabeledStableGraph{std::move(g), std::move(names)};
}

Int labeled_aut_order(const LabeledStableGraph& lg) {
    const StableGraph& g = lg.graph;
    if (!is_stable(g)) throw std::domain_error("labeled_aut_order: graph is not stable");
    if (!g.is_connected()) throw std::domain_error("labeled_aut_order: graph is disconnected");
    const int n = g.num_vertices();
    std::vector<bool> pinned(n, false);
    for (int v = 0; v < n; ++v) pinned[v] = g.vertices()[v].ext > 0;
    Int order = vertex_aut_count(g, pinned);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            order *= factorial(static_cast<unsigned>(g.multiplicity(u, v)));
    for (int v = 0; v < n; ++v) {
        const unsigned l = static_cast<unsigned>(g.loops_at(v));
        order *= factorial(l);
        order <<= l;
    }
    return order;  // no leg-permutation factor: named legs are individually fixed
}

CanonicalKey labeled_canonical_key(const LabeledStableGraph& g) {
    return canonical_key_tagged(g.graph, name_tags(g));
}

std::vector<LabeledStableGraph> leg_namings(const StableGraph& g,
                                            const std::vector<int>& names) {
    if (static_cast<int>(names.size()) != g.ext_total())
        throw std::invalid_argument("leg_namings: name count differs from leg count");
    std::vector<LabeledStableGraph> out;
    std::map<CanonicalKey, bool> seen;
    std::vector<std::vector<int>> assignment(g.num_vertices());
    std::vector<bool> used(names.size(), false);

    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.num_vertices()) {
            LabeledStableGraph lg = make_labeled(g, assignment);
            const CanonicalKey key = labeled_canonical_key(lg);
            if (seen.emplace(key, true).second) out.push_back(std::move(lg));
            return;
        }
        const int want = g.vertices()[v].ext;
        // choose `want` unused names for vertex v, in increasing order
        std::vector<int> chosen;
        auto pick = [&](auto&& me, int start) -> void {
            if (static_cast<int>(chosen.size()) == want) {
                assignment[v] = chosen;
                self(self, v + 1);
                return;
            }
            for (int i = start; i < static_cast<int>(names.size()); ++i) {
                if (used[i]) continue;
                used[i] = true;
                chosen.push_back(names[i]);
                me(me, i + 1);
                chosen.pop_back();
                used[i] = false;
            }
        };
        pick(pick, 0);
    };
    rec(rec, 0);
    return out;
}

std::vector<std::pair<LabeledStableGraph, Rat>> labeled_expansion(
    CatalogStore& store, int g, const std::vector<int>& names) {
    const GraphCatalog& cat = store.get(g, static_cast<int>(names.size()));
    std::vector<std::pair<LabeledStableGraph, Rat>> out;
    for (int i = 0; i < cat.size(); ++i)
        for (LabeledStableGraph& lg : leg_namings(cat.at(i).graph, names)) {
            Rat coeff = Rat(1) / Rat(labeled_aut_order(lg));
            out.emplace_back(std::move(lg), std::move(coeff));
        }
    return out;
}

FormalSum hat_g(const ContractionPoset& poset, int index) {
    const GraphCatalog& cat = poset.catalog();
    const IncidenceFunction zt = generalized_zeta(poset);
    FormalSum sum(cat);
    for (int y = 0; y < poset.size(); ++y)
        if (poset.leq(y, index)) sum.add(y, zt.at(y, index));
    return sum;
}

FormalSum duality_map(const ContractionPoset& poset, int index) {
    FormalSum sum = hat_g(poset, index);
    const int sign = poset.catalog().at(index).graph.num_edges() % 2 ? -1 : 1;
    FormalSum out(poset.catalog());
    out.add(sum, Rat(sign));
    return out;
}

FormalSum dotted_expand_direct(CatalogStore& store, const ContractionPoset& poset,
                               int index) {
    const GraphCatalog& cat = poset.catalog();
    const StableGraph& gamma = cat.at(index).graph;
    const int nv = gamma.num_vertices();
    const int ne = gamma.num_edges();

    // Half-edge names: internal edge k owns names 2k and 2k+1 (for a non-loop
    // edge, 2k sits at the smaller endpoint); external legs get names from
    // 2|E| upward. Each vertex collects the names of its half-edges.
    std::vector<std::vector<int>> vertex_names(nv);
    for (int k = 0; k < ne; ++k) {
        const Edge e = gamma.edges()[k];
        vertex_names[e.first].push_back(2 * k);
        vertex_names[e.second].push_back(2 * k + 1);
    }
    int next_ext = 2 * ne;
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < gamma.vertices()[v].ext; ++i)
            vertex_names[v].push_back(next_ext++);

    std::vector<std::vector<std::pair<LabeledStableGraph, Rat>>> expansions(nv);
    for (int v = 0; v < nv; ++v)
        expansions[v] =
            labeled_expansion(store, gamma.vertices()[v].genus, vertex_names[v]);

    FormalSum result(cat);
    std::vector<int> choice(nv, 0);

    auto glue_choice = [&]() {
        // disjoint union of the chosen labeled pieces
        std::vector<Vertex> verts;
        std::vector<Edge> edges;
        std::map<int, int> vertex_of_name;
        Rat coeff = 1;
        for (int v = 0; v < nv; ++v) {
            const auto& [piece, pc] = expansions[v][choice[v]];
            coeff *= pc;
            const int offset = static_cast<int>(verts.size());
            for (int u = 0; u < piece.graph.num_vertices(); ++u) {
                verts.push_back(piece.graph.vertices()[u]);
                for (int name : piece.names[u]) vertex_of_name[name] = offset + u;
            }
            for (const Edge& e : piece.graph.edges())
                edges.emplace_back(e.first + offset, e.second + offset);
        }
        // join the two named stubs of every cut edge; the stubs stop being legs
        for (int k = 0; k < ne; ++k) {
            const int a = vertex_of_name.at(2 * k);
            const int b = vertex_of_name.at(2 * k + 1);
            edges.emplace_back(a, b);
            verts[a].ext -= 1;
            verts[b].ext -= 1;
        }
        const StableGraph glued(std::move(verts), std::move(edges));
        result.add(cat.require_index(canonical_key(glued)), coeff);
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            glue_choice();
            return;
        }
        for (int i = 0; i < static_cast<int>(expansions[v].size()); ++i) {
            choice[v] = i;
            self(self, v + 1);
        }
    };
    rec(rec, 0);

    FormalSum out(cat);
    out.add(result, Rat(ne % 2 ? -1 : 1));
    return out;
}

CheckReport verify_involution(const ContractionPoset& poset) {
    const int n = poset.size();
    const IncidenceFunction zt = generalized_zeta(poset);
    const auto& cat = poset.catalog();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j) {
        const int sign = cat.at(j).graph.num_edges() % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i)
            if (poset.leq(i, j)) m[i][j] = Rat(sign) * zt.at(i, j);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat acc = 0;
            for (int k = 0; k < n; ++k) acc += m[i][k] * m[k][j];
            if (acc != Rat(i == j ? 1 : 0))
                return {false, "phi^2 differs from identity at (" + std::to_string(i) +
                                   "," + std::to_string(j) + "): " + rat_to_string(acc)};
        }
    return {true, "phi^2 = id on " + std::to_string(n) + " classes"};
}

CheckReport verify_duality_sum(const ContractionPoset& poset) {
    const auto& cat = poset.catalog();
    FormalSum total(cat);
    for (int j = 0; j < poset.size(); ++j) {
        const int sign = cat.at(j).graph.num_edges() % 2 ? -1 : 1;
        total.add(hat_g(poset, j), Rat(sign) / Rat(cat.at(j).aut));
    }
    FormalSum expected(cat);
    expected.add(cat.vertex_index(),
                 Rat(1) / Rat(factorial(static_cast<unsigned>(cat.ext()))));
    if (!(total == expected)) {
        std::string detail = "signed hat-g sum is not Ver/n!:";
        for (const auto& [idx, c] : total.terms())
            detail += " [" + std::to_string(idx) + "]=" + rat_to_string(c);
        return {false, detail};
    }
    return {true, "signed hat-g sum equals Ver/n!"};
}

CheckReport verify_dotted_oracle(CatalogStore& store, const ContractionPoset& poset) {
    for (int i = 0; i < poset.size(); ++i) {
        const FormalSum lhs = duality_map(poset, i);
        const FormalSum rhs = dotted_expand_direct(store, poset, i);
        if (!(lhs == rhs))
            return {false, "poset formula and labeled gluing disagree at index " +
                               std::to_string(i)};
    }
    return {true, "poset formula matches labeled gluing on " +
                      std::to_string(poset.size()) + " classes"};
}

}  // namespace sgm
