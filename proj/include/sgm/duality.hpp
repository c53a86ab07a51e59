#pragma once

#include "sgm/catalog.hpp"
#include "sgm/poset.hpp"

#include <string>
#include <vector>

namespace sgm {

// A stable graph whose external legs carry pairwise distinct integer names.
// Automorphisms of a labeled graph must fix every named leg, so vertices
// carrying legs are pinned and the leg-permutation factor disappears.
struct LabeledStableGraph {
    StableGraph graph;
    std::vector<std::vector<int>> names;  // per vertex, sorted; sizes match ext
};

LabeledStableGraph make_labeled(StableGraph g, std::vector<std::vector<int>> names);

Int labeled_aut_order(const LabeledStableGraph& g);

CanonicalKey labeled_canonical_key(const LabeledStableGraph& g);

// All inequivalent ways of distributing the given names over the legs of g,
// one representative per labeled isomorphism class.
std::vector<LabeledStableGraph> leg_namings(const StableGraph& g,
                                            const std::vector<int>& names);

// The sum of all connected labeled stable graphs of genus g carrying exactly
// the given leg names, each weighted by 1/|Aut| of the labeled graph.
std::vector<std::pair<LabeledStableGraph, Rat>> labeled_expansion(
    CatalogStore& store, int g, const std::vector<int>& names);

// hat-g(x) = sum_{y <= x} zeta~(y,x) y, the resummation of a graph over its
// degenerations.
FormalSum hat_g(const ContractionPoset& poset, int index);

// The duality map: phi(x) = (-1)^{|E(x)|} hat-g(x).
FormalSum duality_map(const ContractionPoset& poset, int index);

// Independent construction of phi by cutting internal edges, expanding each
// vertex as a named-leg sum, regluing matching names, and forgetting names.
FormalSum dotted_expand_direct(CatalogStore& store, const ContractionPoset& poset,
                               int index);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// Checks phi^2 = Id as an exact matrix identity in the catalog basis.
CheckReport verify_involution(const ContractionPoset& poset);

// Checks sum_x (-1)^{|E(x)|}/|Aut(x)| hat-g(x) = Ver / n!.
CheckReport verify_duality_sum(const ContractionPoset& poset);

// Checks phi(x) = dotted_expand_direct(x) coefficientwise for every x.
CheckReport verify_dotted_oracle(CatalogStore& store, const ContractionPoset& poset);

}  // namespace sgm
