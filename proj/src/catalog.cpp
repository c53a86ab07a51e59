#include "sgm/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgm {

namespace {

// One inverse-contraction step applied to every vertex of g: vertex splits
// (insert a separating edge, distribute genus, legs, loops and edge ends) and
// loop insertions (genus -1, loop +1). Unstable results are dropped here;
// duplicates are left for the caller's key dedup.
std::vector<StableGraph> expand_one(const StableGraph& g) {
    std::vector<StableGraph> out;
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        const Vertex vd = g.vertices()[v];
        if (vd.genus >= 1) {
            std::vector<Vertex> verts = g.vertices();
            verts[v].genus -= 1;
            std::vector<Edge> edges = g.edges();
            edges.emplace_back(v, v);
            out.emplace_back(std::move(verts), std::move(edges));
        }
        // incident structure: loops get 3 placements (left, right, bridging
        // edge), each non-loop end gets 2, legs split by count
        std::vector<int> loop_idx, end_idx;
        for (int i = 0; i < g.num_edges(); ++i) {
            const Edge e = g.edges()[i];
            if (e.first == v && e.second == v)
                loop_idx.push_back(i);
            else if (e.first == v || e.second == v)
                end_idx.push_back(i);
        }
        const int nl = static_cast<int>(loop_idx.size());
        const int nd = static_cast<int>(end_idx.size());
        long long loop_cfg = 1;
        for (int i = 0; i < nl; ++i) loop_cfg *= 3;
        for (int g1 = 0; g1 <= vd.genus; ++g1)
            for (int e1 = 0; e1 <= vd.ext; ++e1)
                for (long long lc = 0; lc < loop_cfg; ++lc)
                    for (long long dc = 0; dc < (1LL << nd); ++dc) {
                        std::vector<Vertex> verts = g.vertices();
                        verts[v] = {g1, e1};
                        verts.push_back({vd.genus - g1, vd.ext - e1});
                        const int w = n;
                        std::vector<Edge> edges = g.edges();
                        long long l = lc;
                        for (int i = 0; i < nl; ++i) {
                            const int c = static_cast<int>(l % 3);
                            l /= 3;
                            if (c == 1)
                                edges[loop_idx[i]] = {w, w};
                            else if (c == 2)
                                edges[loop_idx[i]] = {v, w};
                        }
                        for (int i = 0; i < nd; ++i) {
                            if (!((dc >> i) & 1)) continue;
                            Edge& e = edges[end_idx[i]];
                            if (e.first == v)
                                e.first = w;
                            else
                                e.second = w;
                        }
                        edges.emplace_back(v, w);
                        StableGraph cand(std::move(verts), std::move(edges));
                        const auto stable_at = [&](int u) {
                            return 2 * cand.vertices()[u].genus - 2 + cand.valence(u) > 0;
                        };
                        if (stable_at(v) && stable_at(w)) out.push_back(std::move(cand));
                    }
    }
    return out;
}

}  // namespace

std::optional<int> GraphCatalog::index_of(const CanonicalKey& key) const {
    const auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int GraphCatalog::require_index(const CanonicalKey& key) const {
    const auto it = index_.find(key);
    if (it == index_.end()) throw std::domain_error("graph not in catalog");
    return it->second;
}

GraphCatalog GraphCatalog::from_entries(int g, int n, std::vector<CatalogEntry> entries) {
    GraphCatalog cat;
    cat.g_ = g;
    cat.n_ = n;
    cat.entries_ = std::move(entries);
    for (int i = 0; i < cat.size(); ++i) cat.index_[cat.entries_[i].key] = i;
    return cat;
}

GraphCatalog GraphCatalog::build(int g, int n, Execution exec) {
    return enumerate_catalog(g, n, exec);
}

GraphCatalog enumerate_catalog(int g, int n, Execution exec) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
        throw std::domain_error("enumerate_catalog: (g,n) violates stability");

    StableGraph seed({Vertex{g, n}}, {});
    auto [seed_canon, seed_key] = canonicalize(seed);

    std::unordered_map<CanonicalKey, StableGraph> known;
    known.emplace(seed_key, seed_canon);
    std::vector<StableGraph> frontier{seed_canon};

    while (!frontier.empty()) {
        const int m = static_cast<int>(frontier.size());
        std::vector<std::vector<std::pair<CanonicalKey, StableGraph>>> produced(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
#endif
        for (int i = 0; i < m; ++i) {
            for (StableGraph& cand : expand_one(frontier[i])) {
                auto [canon, key] = canonicalize(cand);
                produced[i].emplace_back(std::move(key), std::move(canon));
            }
        }
        // merge in frontier order so the result is schedule-independent
        std::vector<StableGraph> next;
        for (auto& bucket : produced)
            for (auto& [key, graph] : bucket)
                if (known.emplace(key, graph).second) next.push_back(std::move(graph));
        frontier = std::move(next);
    }

    std::vector<std::pair<CanonicalKey, StableGraph>> members(known.begin(), known.end());
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        const int ea = a.second.num_edges(), eb = b.second.num_edges();
        return ea != eb ? ea < eb : a.first < b.first;
    });

    std::vector<CatalogEntry> entries(members.size());
    const int total = static_cast<int>(members.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
#endif
    for (int i = 0; i < total; ++i) {
        entries[i] = CatalogEntry{members[i].second, members[i].first,
                                  aut_order(members[i].second)};
    }
    return GraphCatalog::from_entries(g, n, std::move(entries));
}

Rat FormalSum::coeff(int index) const {
    const auto it = terms_.find(index);
    return it == terms_.end() ? Rat(0) : it->second;
}

void FormalSum::add(int index, const Rat& value) {
    if (value == 0) return;
    const auto [it, inserted] = terms_.emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

void FormalSum::add(const FormalSum& other, const Rat& scale) {
    if (catalog_ != other.catalog_) throw std::domain_error("FormalSum: catalog mismatch");
    for (const auto& [idx, c] : other.terms_) add(idx, c * scale);
}

bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.catalog_ == b.catalog_ && a.terms_ == b.terms_;
}

FormalSum abstract_npoint(const GraphCatalog& catalog) {
    FormalSum sum(catalog);
    for (int i = 0; i < catalog.size(); ++i)
        sum.add(i, Rat(1) / Rat(catalog.at(i).aut));
    return sum;
}

const GraphCatalog& CatalogStore::get(int g, int n) {
    const auto key = std::make_pair(g, n);
    if (const auto it = pool_.find(key); it != pool_.end()) return *it->second;
    if (load_) {
        if (auto loaded = load_(g, n)) {
            auto ptr = std::make_shared<const GraphCatalog>(std::move(*loaded));
            pool_.emplace(key, ptr);
            return *ptr;
        }
    }
    auto ptr = std::make_shared<const GraphCatalog>(enumerate_catalog(g, n, exec_));
    if (store_) store_(*ptr);
    pool_.emplace(key, ptr);
    return *ptr;
}

void CatalogStore::put(GraphCatalog catalog) {
    const auto key = std::make_pair(catalog.genus(), catalog.ext());
    pool_[key] = std::make_shared<const GraphCatalog>(std::move(catalog));
}

bool CatalogStore::contains(int g, int n) const {
    return pool_.count(std::make_pair(g, n)) > 0;
}

void CatalogStore::set_hooks(LoadHook load, StoreHook store) {
    load_ = std::move(load);
    store_ = std::move(store);
}

}  // namespace sgm
