#pragma once

#include "sgm/catalog.hpp"
#include "sgm/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace sgm {

// Bernoulli number B_k for even k (B_1 = -1/2 convention internally; only
// even indices are exposed). Computed by the defining recurrence.
Rat bernoulli(int k);

// chi of the open moduli space: (-1)^n (2g-1) B_{2g} / (2g)! * (2g+n-3)!.
Rat harer_zagier(int g, int n);

// chi of the compactified space via the catalog sum with vertex rule
// F_{g,n} = harer_zagier(g,n) and edge weight 1.
Rat chi_closed(CatalogStore& store, int g, int n);

// The sign-flipped catalog sum over chi_closed values; throws when the
// result fails to reproduce harer_zagier(g, n).
Rat chi_open_inverted(CatalogStore& store, int g, int n);

struct EulerTable {
    int max_grade = 0;
    // (g, n) -> (chi open, chi closed); keys ordered by (g, n)
    std::map<std::pair<int, int>, std::pair<Rat, Rat>> rows;
};

// Both columns for every (g, n) with 1 <= 2g-2+n <= max_grade, with the
// inversion roundtrip enforced per entry.
EulerTable euler_table(CatalogStore& store, int max_grade);

// "g,n,chi_open,chi_closed" rows, rationals as p/q.
std::string euler_csv(const EulerTable& table);

}  // namespace sgm
