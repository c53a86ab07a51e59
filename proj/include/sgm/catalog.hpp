#pragma once

#include "sgm/canonical.hpp"
#include "sgm/rational.hpp"
#include "sgm/stable_graph.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sgm {

// Kernel execution policy: `parallel` uses OpenMP worker threads, `serial` is
// the reference path. Results are identical byte-for-byte.
enum class Execution { serial, parallel };

struct CatalogEntry {
    StableGraph graph;  // stored in canonical form
    CanonicalKey key;
    Int aut;
};

// The set of connected stable graphs of genus g with n external legs, one
// representative per isomorphism class, ordered by (edge count, key).
class GraphCatalog {
public:
    int genus() const { return g_; }
    int ext() const { return n_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry& at(int i) const { return entries_.at(i); }
    std::optional<int> index_of(const CanonicalKey& key) const;
    int require_index(const CanonicalKey& key) const;  // throws if absent
    int vertex_index() const { return 0; }  // the edge-free maximum sorts first

    static GraphCatalog build(int g, int n, Execution exec = Execution::parallel);
    static GraphCatalog from_entries(int g, int n, std::vector<CatalogEntry> entries);

private:
    int g_ = 0;
    int n_ = 0;
    std::vector<CatalogEntry> entries_;
    std::unordered_map<CanonicalKey, int> index_;
};

// Enumerates the catalog by breadth-first degeneration from the stable vertex:
// each step either splits a vertex along a new edge or trades one unit of
// genus for a loop; these are exactly the inverses of edge contraction.
GraphCatalog enumerate_catalog(int g, int n, Execution exec = Execution::parallel);

// Sparse rational linear combination of catalog members.
class FormalSum {
public:
    explicit FormalSum(const GraphCatalog& catalog) : catalog_(&catalog) {}

    const GraphCatalog& catalog() const { return *catalog_; }
    const std::map<int, Rat>& terms() const { return terms_; }
    Rat coeff(int index) const;
    void add(int index, const Rat& value);  // drops the entry when it cancels
    void add(const FormalSum& other, const Rat& scale = 1);

    friend bool operator==(const FormalSum& a, const FormalSum& b);

private:
    const GraphCatalog* catalog_;
    std::map<int, Rat> terms_;
};

// The abstract n-point sum: coefficient 1/|Aut| on every catalog member.
FormalSum abstract_npoint(const GraphCatalog& catalog);

// Shared in-memory pool of catalogs keyed by (g, n); single-threaded use.
class CatalogStore {
public:
    explicit CatalogStore(Execution exec = Execution::parallel) : exec_(exec) {}

    const GraphCatalog& get(int g, int n);
    void put(GraphCatalog catalog);
    bool contains(int g, int n) const;

    // Hook for a persistent cache layer: called before computing (may return
    // a loaded catalog) and after computing (to persist).
    using LoadHook = std::function<std::optional<GraphCatalog>(int, int)>;
    using StoreHook = std::function<void(const GraphCatalog&)>;
    void set_hooks(LoadHook load, StoreHook store);

private:
    Execution exec_;
    std::map<std::pair<int, int>, std::shared_ptr<const GraphCatalog>> pool_;
    LoadHook load_;
    StoreHook store_;
};

}  // namespace sgm
