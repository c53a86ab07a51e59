#pragma once

#include "sgm/catalog.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sgm {

// Contract a single internal edge: a loop disappears and its vertex gains one
// genus; a non-loop edge merges its endpoints (genera add, parallel copies
// become loops). Surviving edges keep their relative order, so the index of
// any later edge just shifts down by one.
StableGraph contract(const StableGraph& g, int edge_index);

// Contract a set of edges successively; the result does not depend on the
// order in which they are taken.
StableGraph contract_edges(const StableGraph& g, const std::vector<int>& edge_indices);

// The contraction order on a catalog: x <= y iff y is obtained from x by
// contracting some subset of internal edges. Indices follow the catalog, so
// the relation is lower-triangular (contraction strictly removes edges).
class ContractionPoset {
public:
    const GraphCatalog& catalog() const { return *catalog_; }
    int size() const { return static_cast<int>(count_.size()); }

    bool leq(int x, int y) const { return count_[x][y] > 0; }
    // |C(x,y)|: the number of edge subsets of x whose contraction yields y.
    long long contraction_count(int x, int y) const { return count_[x][y]; }

    int max_index() const { return catalog_->vertex_index(); }
    std::vector<int> minimal_indices() const;
    // (x, y) pairs with x < y and an empty open interval, i.e. y covers x.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    static ContractionPoset build(const GraphCatalog& catalog,
                                  Execution exec = Execution::parallel);

private:
    const GraphCatalog* catalog_ = nullptr;
    std::vector<std::vector<long long>> count_;
    std::vector<std::pair<int, int>> covers_;
};

// Dense rational function on ordered pairs, supported on the order relation.
class IncidenceFunction {
public:
    IncidenceFunction(const ContractionPoset& poset, Rat diagonal = 0);

    const ContractionPoset& poset() const { return *poset_; }
    int size() const { return static_cast<int>(m_.size()); }
    const Rat& at(int x, int y) const { return m_[x][y]; }
    void set(int x, int y, Rat value);  // rejects writes off the order support

    friend bool operator==(const IncidenceFunction&, const IncidenceFunction&) = default;

private:
    const ContractionPoset* poset_;
    std::vector<std::vector<Rat>> m_;
};

IncidenceFunction delta_function(const ContractionPoset& p);
IncidenceFunction zeta_function(const ContractionPoset& p);
// Inverse of the classical zeta, built by the interval recursion.
IncidenceFunction classical_mobius(const ContractionPoset& p);

// zeta~(x,y) = |Aut(y)|/|Aut(x)| * |C(x,y)| on the order support.
IncidenceFunction generalized_zeta(const ContractionPoset& p);
// Inverse of zeta~ in the incidence algebra, by the same interval recursion.
IncidenceFunction generalized_mobius(const ContractionPoset& p);

// (f*g)(x,y) = sum over the interval [x,y] of f(x,z) g(z,y).
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

// g(x) = sum_{y<=x} f(y) zeta~(y,x) and its inverse via mu~.
std::vector<Rat> inversion_forward(const ContractionPoset& p, const std::vector<Rat>& f);
std::vector<Rat> inversion_backward(const ContractionPoset& p, const std::vector<Rat>& g);

// Graphviz digraph of the covering relations, arrows from larger (more
// contracted) to smaller elements.
std::string hasse_dot(const ContractionPoset& p);

}  // namespace sgm
