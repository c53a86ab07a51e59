#include "sgm/stable_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgm {

StableGraph::StableGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = num_vertices();
    for (const auto& v : vertices_)
        if (v.genus < 0 || v.ext < 0)
            throw std::invalid_argument("negative genus or external-leg count");
    for (auto& e : edges_) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
}

int StableGraph::ext_total() const {
    int n = 0;
    for (const auto& v : vertices_) n += v.ext;
    return n;
}

int StableGraph::loops_at(int v) const {
    int n = 0;
    for (const auto& e : edges_)
        if (e.first == v && e.second == v) ++n;
    return n;
}

int StableGraph::multiplicity(int u, int v) const {
    if (u == v) return 0;
    if (u > v) std::swap(u, v);
    int n = 0;
    for (const auto& e : edges_)
        if (e.first == u && e.second == v) ++n;
    return n;
}

int StableGraph::internal_degree(int v) const {
    int n = 0;
    for (const auto& e : edges_) {
        if (e.first == v) ++n;
        if (e.second == v) ++n;
    }
    return n;
}

std::vector<int> StableGraph::component_labels() const {
    const int n = num_vertices();
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges_) {
                const int other = e.first == v ? e.second : (e.second == v ? e.first : -1);
                if (other >= 0 && label[other] < 0) {
                    label[other] = next;
                    stack.push_back(other);
                }
            }
        }
        ++next;
    }
    return label;
}

int StableGraph::component_count() const {
    if (num_vertices() == 0) return 0;
    const auto label = component_labels();
    return *std::max_element(label.begin(), label.end()) + 1;
}

bool StableGraph::is_connected() const { return component_count() == 1; }

bool is_stable(const StableGraph& g) {
    if (g.num_vertices() == 0) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (2 * g.vertices()[v].genus - 2 + g.valence(v) <= 0) return false;
    return true;
}

int genus(const StableGraph& g) {
    const int k = g.component_count();
    if (k == 0) throw std::domain_error("genus of empty graph");
    const auto label = g.component_labels();
    std::vector<int> edges_in(k, 0), verts_in(k, 0), genus_sum(k, 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        ++verts_in[label[v]];
        genus_sum[label[v]] += g.vertices()[v].genus;
    }
    for (const auto& e : g.edges()) ++edges_in[label[e.first]];
    int total = 0;
    for (int c = 0; c < k; ++c) {
        const int h1 = edges_in[c] - verts_in[c] + 1;
        total += h1 + genus_sum[c];
    }
    return total - k + 1;
}

}  // namespace sgm
