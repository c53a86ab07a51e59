#pragma once

#include "sgm/catalog.hpp"
#include "sgm/poset.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace sgm {

// Commuting vertex symbol indexed by (genus, valence).
struct FSymbol {
    int g = 0;
    int n = 0;
    friend auto operator<=>(const FSymbol&, const FSymbol&) = default;
};

// kappa^e times a multiset of vertex symbols.
struct Monomial {
    int kappa = 0;
    std::vector<std::pair<FSymbol, int>> factors;  // sorted, positive powers
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Rational values for the vertex symbols and the edge symbol.
struct FeynmanAssignment {
    std::map<std::pair<int, int>, Rat> values;
    Rat kappa = 1;
};

// Sparse polynomial over Q in kappa and the F symbols.
class SymbolicWeight {
public:
    SymbolicWeight() = default;
    static SymbolicWeight constant(Rat c);
    static SymbolicWeight symbol(FSymbol s);
    static SymbolicWeight kappa_power(int e);

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Monomial m, const Rat& c);

    SymbolicWeight& operator+=(const SymbolicWeight& o);
    SymbolicWeight& operator*=(const Rat& c);
    friend SymbolicWeight operator+(SymbolicWeight a, const SymbolicWeight& b);
    friend SymbolicWeight operator*(const SymbolicWeight& a, const SymbolicWeight& b);
    friend SymbolicWeight operator*(SymbolicWeight a, const Rat& c);
    friend bool operator==(const SymbolicWeight&, const SymbolicWeight&) = default;

    // Replace every F symbol by the mapped polynomial, expanding fully.
    SymbolicWeight substitute(const std::map<FSymbol, SymbolicWeight>& table) const;

    // Numeric value; throws std::domain_error when a needed symbol is missing.
    Rat evaluate(const FeynmanAssignment& a) const;

    // The monomials surviving kappa = 0.
    SymbolicWeight kappa_zero() const;

private:
    std::map<Monomial, Rat> terms_;
};

// w(x) = kappa^{|E|} * prod F_{g_v, val_v} over the vertices.
SymbolicWeight graph_weight(const StableGraph& g);

// F~_{g,n} = n! sum over the catalog of kappa^{|E|}/|Aut| prod F_{g_v,val_v}.
SymbolicWeight graph_sum_forward(CatalogStore& store, int g, int n);

// The same sum with kappa -> -kappa; its F symbols stand for the F~ values,
// so substituting graph_sum_forward into it collapses to the single symbol
// F_{g,n}.
SymbolicWeight graph_sum_inverse(CatalogStore& store, int g, int n);

// g~(x) computed as sum_{y<=x} zeta~(y,x) w(y); asserts agreement with the
// product form kappa^{|E|} prod F~_{g_v,val_v} and returns the sum.
SymbolicWeight gtilde_of_graph(CatalogStore& store, const ContractionPoset& poset,
                               int index);

}  // namespace sgm
