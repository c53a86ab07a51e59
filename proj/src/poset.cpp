#include "sgm/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgm {

StableGraph contract(const StableGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.num_edges())
        throw std::domain_error("contract: not an internal edge of the graph");
    const Edge e = g.edges()[edge_index];
    std::vector<Vertex> verts = g.vertices();
    std::vector<Edge> edges;
    edges.reserve(g.num_edges() - 1);
    if (e.first == e.second) {
        verts[e.first].genus += 1;
        for (int i = 0; i < g.num_edges(); ++i)
            if (i != edge_index) edges.push_back(g.edges()[i]);
        return StableGraph(std::move(verts), std::move(edges));
    }
    const int keep = e.first, gone = e.second;
    verts[keep].genus += verts[gone].genus;
    verts[keep].ext += verts[gone].ext;
    verts.erase(verts.begin() + gone);
    auto remap = [&](int v) { return v == gone ? keep : (v > gone ? v - 1 : v); };
    for (int i = 0; i < g.num_edges(); ++i) {
        if (i == edge_index) continue;
        edges.emplace_back(remap(g.edges()[i].first), remap(g.edges()[i].second));
    }
    return StableGraph(std::move(verts), std::move(edges));
}

StableGraph contract_edges(const StableGraph& g, const std::vector<int>& edge_indices) {
    std::vector<bool> marked(g.num_edges(), false);
    for (int i : edge_indices) {
        if (i < 0 || i >= g.num_edges())
            throw std::domain_error("contract_edges: edge index out of range");
        marked[i] = true;
    }
    StableGraph cur = g;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < static_cast<int>(marked.size()); ++i)
            if (marked[i]) {
                pick = i;
                break;
            }
        if (pick < 0) return cur;
        cur = contract(cur, pick);
        marked.erase(marked.begin() + pick);
    }
}

namespace {

// All contraction targets of one catalog member, bucketed by catalog index.
// Keys outside the catalog cannot occur: contraction preserves genus, leg
// count and connectivity.
std::vector<long long> contraction_row(const GraphCatalog& catalog, int x) {
    std::vector<long long> row(catalog.size(), 0);
    const StableGraph& g = catalog.at(x).graph;
    const int ne = g.num_edges();
    for (long long mask = 0; mask < (1LL << ne); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < ne; ++i)
            if ((mask >> i) & 1) subset.push_back(i);
        const CanonicalKey key = canonical_key(contract_edges(g, subset));
        row[catalog.require_index(key)] += 1;
    }
    return row;
}

}  // namespace

ContractionPoset ContractionPoset::build(const GraphCatalog& catalog, Execution exec) {
    ContractionPoset p;
    p.catalog_ = &catalog;
    const int n = catalog.size();
    p.count_.assign(n, {});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
#endif
    for (int x = 0; x < n; ++x) p.count_[x] = contraction_row(catalog, x);

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || p.count_[x][y] == 0) continue;
            bool covered = true;
            for (int z = 0; z < n && covered; ++z)
                if (z != x && z != y && p.count_[x][z] > 0 && p.count_[z][y] > 0)
                    covered = false;
            if (covered) p.covers_.emplace_back(x, y);
        }
    return p;
}

std::vector<int> ContractionPoset::minimal_indices() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        bool minimal = true;
        for (int y = 0; y < size() && minimal; ++y)
            if (y != x && count_[y][x] > 0) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

IncidenceFunction::IncidenceFunction(const ContractionPoset& poset, Rat diagonal)
    : poset_(&poset), m_(poset.size(), std::vector<Rat>(poset.size(), Rat(0))) {
    for (int x = 0; x < poset.size(); ++x) m_[x][x] = diagonal;
}

void IncidenceFunction::set(int x, int y, Rat value) {
    if (!poset_->leq(x, y) && value != 0)
        throw std::domain_error("IncidenceFunction: support outside the order relation");
    m_[x][y] = std::move(value);
}

IncidenceFunction delta_function(const ContractionPoset& p) {
    return IncidenceFunction(p, Rat(1));
}

IncidenceFunction zeta_function(const ContractionPoset& p) {
    IncidenceFunction f(p);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y)) f.set(x, y, Rat(1));
    return f;
}

IncidenceFunction generalized_zeta(const ContractionPoset& p) {
    IncidenceFunction f(p);
    const auto& cat = p.catalog();
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y))
                f.set(x, y, Rat(cat.at(y).aut, cat.at(x).aut) * p.contraction_count(x, y));
    return f;
}

namespace {

// mu(x,z) = -sum_{y in (x,z]} base(x,y) mu(y,z), mu(x,x) = 1; this is the
// interval recursion inverting `base`, used for both the classical and the
// generalized Mobius function. The catalog order sorts by edge count, so a
// strict relation x < y always steps to a smaller index and a single
// descending sweep per column suffices.
IncidenceFunction invert_by_recursion(const IncidenceFunction& base) {
    const ContractionPoset& p = base.poset();
    IncidenceFunction mu(p, Rat(1));
    for (int z = 0; z < p.size(); ++z)
        for (int x = z + 1; x < p.size(); ++x) {
            if (!p.leq(x, z)) continue;
            Rat acc = 0;
            for (int y = 0; y < x; ++y)
                if (p.leq(x, y) && p.leq(y, z)) acc += base.at(x, y) * mu.at(y, z);
            mu.set(x, z, -acc);
        }
    return mu;
}

}  // namespace

IncidenceFunction classical_mobius(const ContractionPoset& p) {
    return invert_by_recursion(zeta_function(p));
}

IncidenceFunction generalized_mobius(const ContractionPoset& p) {
    return invert_by_recursion(generalized_zeta(p));
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
    if (&f.poset() != &g.poset())
        throw std::domain_error("convolve: incidence functions on different posets");
    const ContractionPoset& p = f.poset();
    IncidenceFunction h(p);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            Rat acc = 0;
            for (int z = 0; z < p.size(); ++z)
                if (p.leq(x, z) && p.leq(z, y)) acc += f.at(x, z) * g.at(z, y);
            h.set(x, y, std::move(acc));
        }
    return h;
}

std::vector<Rat> inversion_forward(const ContractionPoset& p, const std::vector<Rat>& f) {
    if (static_cast<int>(f.size()) != p.size())
        throw std::domain_error("inversion_forward: size mismatch");
    const IncidenceFunction zt = generalized_zeta(p);
    std::vector<Rat> g(p.size(), Rat(0));
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(y, x)) g[x] += f[y] * zt.at(y, x);
    return g;
}

std::vector<Rat> inversion_backward(const ContractionPoset& p, const std::vector<Rat>& g) {
    if (static_cast<int>(g.size()) != p.size())
        throw std::domain_error("inversion_backward: size mismatch");
    const IncidenceFunction mu = generalized_mobius(p);
    std::vector<Rat> f(p.size(), Rat(0));
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(y, x)) f[x] += g[y] * mu.at(y, x);
    return f;
}

std::string hasse_dot(const ContractionPoset& p) {
    const auto& cat = p.catalog();
    std::string out = "digraph hasse {\n";
    for (int i = 0; i < p.size(); ++i) {
        const auto hex = key_hex(cat.at(i).key).substr(0, 8);
        out += "  n" + std::to_string(i) + " [label=\"" + hex + "\\n" +
               signature(cat.at(i).graph) + "\"];\n";
    }
    // covers() pairs are (smaller, larger); arrows point downward
    for (const auto& [x, y] : p.covers())
        out += "  n" + std::to_string(y) + " -> n" + std::to_string(x) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace sgm
