#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace sgm {

struct Vertex {
    int genus = 0;
    int ext = 0;  // number of external legs attached here (legs are unlabeled)

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Unordered vertex pair, stored with first <= second; a loop has first == second.
using Edge = std::pair<int, int>;

// A graph with per-vertex genus labels and external-leg counts. Half-edges are
// implicit: a loop contributes two at its vertex, a non-loop edge one at each
// endpoint, an external leg one. Connectivity is not enforced by the type.
class StableGraph {
public:
    StableGraph() = default;
    StableGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int ext_total() const;

    int loops_at(int v) const;
    int multiplicity(int u, int v) const;  // parallel non-loop edges between u != v
    // Half-edges at v coming from internal edges (loops count twice).
    int internal_degree(int v) const;
    int valence(int v) const { return vertices_[v].ext + internal_degree(v); }

    bool is_connected() const;
    int component_count() const;
    std::vector<int> component_labels() const;

    friend bool operator==(const StableGraph&, const StableGraph&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;  // pairs normalized, vector sorted
};

// Stability: 2 g_v - 2 + val_v > 0 at every vertex.
bool is_stable(const StableGraph& g);

// First Betti number plus the sum of vertex genera; disconnected graphs
// combine per-component genera as sum - k + 1.
int genus(const StableGraph& g);

}  // namespace sgm
