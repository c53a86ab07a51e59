#pragma once

#include "sgm/rational.hpp"
#include "sgm/stable_graph.hpp"

#include <string>

namespace sgm {

// Deterministic encoding of the isomorphism class: equal keys iff isomorphic
// under genus-preserving vertex/half-edge bijections (external legs permutable).
using CanonicalKey = std::string;

// The minimal serialized relabeling found by color refinement plus exhaustive
// branching on the remaining symmetric vertex classes.
StableGraph canonical_form(const StableGraph& g);

CanonicalKey canonical_key(const StableGraph& g);

// One search for both results; cheaper than calling the two functions above.
std::pair<StableGraph, CanonicalKey> canonicalize(const StableGraph& g);

// Lowercase hex of the key bytes (the external representation).
std::string key_hex(const CanonicalKey& key);

bool is_isomorphic(const StableGraph& a, const StableGraph& b);

// |Aut| counting vertex/half-edge bijection pairs. Factorizes as
//   |Aut_vert| * prod mult(u,v)! * prod 2^l_v l_v! * prod ext_v!
// since the number of half-edge lifts of a vertex automorphism does not
// depend on the chosen vertex permutation. Requires a connected graph.
Int aut_order(const StableGraph& g);

// Count of genus-, ext-, loop- and multiplicity-preserving vertex permutations.
// The pinned overload additionally requires the marked vertices to stay fixed.
Int vertex_aut_count(const StableGraph& g);
Int vertex_aut_count(const StableGraph& g, const std::vector<bool>& pinned);

// Human-readable signature "g=[..] E=[..] ext=[..]" of the canonical form.
std::string signature(const StableGraph& g);

// Canonical key of a graph whose vertices carry extra identity tags (used for
// graphs with named external legs). Tags enter the vertex colors and the key,
// so equal keys mean isomorphic-with-matching-tags.
CanonicalKey canonical_key_tagged(const StableGraph& g, const std::vector<std::string>& tags);

}  // namespace sgm
