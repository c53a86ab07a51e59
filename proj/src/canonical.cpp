#include "sgm/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sgm {

namespace {

// Serialize the graph relabeled by perm (perm[old] = new), vertices in new
// order, edge multiset sorted. This string doubles as the key payload.
std::string serialize_under(const StableGraph& g, const std::vector<int>& perm,
                            const std::vector<std::string>* tags = nullptr) {
    const int n = g.num_vertices();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::string out;
    out.reserve(16 * n);
    for (int p = 0; p < n; ++p) {
        const auto& v = g.vertices()[inv[p]];
        out += 'g';
        out += std::to_string(v.genus);
        out += 'x';
        out += std::to_string(v.ext);
        if (tags) {
            out += '[';
            out += (*tags)[inv[p]];
            out += ']';
        }
        out += ';';
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int a = perm[e.first], b = perm[e.second];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    out += '|';
    for (const auto& e : edges) {
        out += std::to_string(e.first);
        out += '-';
        out += std::to_string(e.second);
        out += ',';
    }
    return out;
}

// Equitable refinement: colors split by (old color, loop count already folded
// into the initial color, multiset of (neighbor color, multiplicity)).
// The signature depends only on isomorphism-invariant data.
void refine(const StableGraph& g, std::vector<int>& color) {
    const int n = g.num_vertices();
    for (;;) {
        using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
        std::vector<Sig> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                const int m = g.multiplicity(u, v);
                if (m > 0) nb.emplace_back(color[u], m);
            }
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::vector<Sig> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == color) return;
        color = std::move(next);
    }
}

// Explore the individualization tree and keep the lexicographically least
// serialization. Graphs here are tiny, so no orbit pruning is needed.
void search_min(const StableGraph& g, std::vector<int> color, std::string& best,
                std::vector<int>& best_perm, const std::vector<std::string>* tags) {
    refine(g, color);
    const int n = g.num_vertices();
    int cls = -1;
    {
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        for (int c = 0; c < n; ++c)
            if (count[c] >= 2) {
                cls = c;
                break;
            }
    }
    if (cls < 0) {  // discrete: color is a permutation old -> position
        std::string s = serialize_under(g, color, tags);
        if (best.empty() || s < best) {
            best = std::move(s);
            best_perm = color;
        }
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != cls) continue;
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + 1;
        next[v] = 2 * color[v];
        // re-rank to a dense coloring
        std::vector<int> vals = next;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int u = 0; u < n; ++u)
            next[u] = static_cast<int>(
                std::lower_bound(vals.begin(), vals.end(), next[u]) - vals.begin());
        search_min(g, std::move(next), best, best_perm, tags);
    }
}

std::vector<int> initial_coloring(const StableGraph& g,
                                  const std::vector<std::string>* tags = nullptr) {
    const int n = g.num_vertices();
    using Tup = std::tuple<int, int, int, int, std::string>;
    std::vector<Tup> sig(n);
    for (int v = 0; v < n; ++v)
        sig[v] = {g.vertices()[v].genus, g.vertices()[v].ext, g.loops_at(v),
                  g.internal_degree(v), tags ? (*tags)[v] : std::string()};
    std::vector<Tup> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v)
        color[v] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    return color;
}

}  // namespace

std::pair<StableGraph, CanonicalKey> canonicalize(const StableGraph& g) {
    if (!is_stable(g)) throw std::domain_error("canonicalize: graph is not stable");
    std::string best;
    std::vector<int> best_perm;
    search_min(g, initial_coloring(g), best, best_perm, nullptr);
    const int n = g.num_vertices();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[best_perm[v]] = v;
    std::vector<Vertex> verts(n);
    for (int p = 0; p < n; ++p) verts[p] = g.vertices()[inv[p]];
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges())
        edges.emplace_back(best_perm[e.first], best_perm[e.second]);
    return {StableGraph(std::move(verts), std::move(edges)), std::move(best)};
}

StableGraph canonical_form(const StableGraph& g) { return canonicalize(g).first; }

CanonicalKey canonical_key(const StableGraph& g) {
    if (!is_stable(g)) throw std::domain_error("canonical_key: graph is not stable");
    std::string best;
    std::vector<int> best_perm;
    search_min(g, initial_coloring(g), best, best_perm, nullptr);
    return best;
}

CanonicalKey canonical_key_tagged(const StableGraph& g,
                                  const std::vector<std::string>& tags) {
    if (!is_stable(g)) throw std::domain_error("canonical_key_tagged: graph is not stable");
    if (static_cast<int>(tags.size()) != g.num_vertices())
        throw std::invalid_argument("canonical_key_tagged: one tag per vertex required");
    std::string best;
    std::vector<int> best_perm;
    search_min(g, initial_coloring(g, &tags), best, best_perm, &tags);
    return best;
}

std::string key_hex(const CanonicalKey& key) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * key.size());
    for (unsigned char c : key) {
        out += digits[c >> 4];
        out += digits[c & 0xf];
    }
    return out;
}

bool is_isomorphic(const StableGraph& a, const StableGraph& b) {
    return canonical_key(a) == canonical_key(b);
}

Int vertex_aut_count(const StableGraph& g, const std::vector<bool>& pinned) {
    const int n = g.num_vertices();
    const auto color = initial_coloring(g);
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    Int count = 0;
    // backtracking over color-preserving assignments, checking multiplicities
    // against the already-assigned prefix
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            if ((pinned[v] || pinned[w]) && v != w) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.multiplicity(u, v) != g.multiplicity(image[u], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            image[v] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

Int vertex_aut_count(const StableGraph& g) {
    return vertex_aut_count(g, std::vector<bool>(g.num_vertices(), false));
}

Int aut_order(const StableGraph& g) {
    if (!is_stable(g)) throw std::domain_error("aut_order: graph is not stable");
    if (!g.is_connected()) throw std::domain_error("aut_order: graph is disconnected");
    Int order = vertex_aut_count(g);
    const int n = g.num_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            order *= factorial(static_cast<unsigned>(g.multiplicity(u, v)));
    for (int v = 0; v < n; ++v) {
        const unsigned l = static_cast<unsigned>(g.loops_at(v));
        order *= factorial(l);
        order <<= l;  // each loop may flip its two half-edges
        order *= factorial(static_cast<unsigned>(g.vertices()[v].ext));
    }
    return order;
}

std::string signature(const StableGraph& g) {
    const StableGraph c = canonical_form(g);
    std::string out = "g=[";
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (v) out += ',';
        out += std::to_string(c.vertices()[v].genus);
    }
    out += "] E=[";
    for (int i = 0; i < c.num_edges(); ++i) {
        if (i) out += ',';
        out += '[' + std::to_string(c.edges()[i].first) + ',' +
               std::to_string(c.edges()[i].second) + ']';
    }
    out += "] ext=[";
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (v) out += ',';
        out += std::to_string(c.vertices()[v].ext);
    }
    out += ']';
    return out;
}

}  // namespace sgm
