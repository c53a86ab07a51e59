#include "sgm/feynman.hpp"

#include <stdexcept>

namespace sgm {

SymbolicWeight SymbolicWeight::constant(Rat c) {
    SymbolicWeight w;
    w.add_term(Monomial{}, c);
    return w;
}

SymbolicWeight SymbolicWeight::symbol(FSymbol s) {
    SymbolicWeight w;
    w.add_term(Monomial{0, {{s, 1}}}, 1);
    return w;
}

SymbolicWeight SymbolicWeight::kappa_power(int e) {
    SymbolicWeight w;
    w.add_term(Monomial{e, {}}, 1);
    return w;
}

void SymbolicWeight::add_term(Monomial m, const Rat& c) {
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolicWeight& SymbolicWeight::operator+=(const SymbolicWeight& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymbolicWeight& SymbolicWeight::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SymbolicWeight operator+(SymbolicWeight a, const SymbolicWeight& b) {
    a += b;
    return a;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.kappa = a.kappa + b.kappa;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first))
            m.factors.push_back(*ia++);
        else if (ia == a.factors.end() || ib->first < ia->first)
            m.factors.push_back(*ib++);
        else {
            m.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return m;
}

}  // namespace

SymbolicWeight operator*(const SymbolicWeight& a, const SymbolicWeight& b) {
    SymbolicWeight out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(merge_monomials(ma, mb), ca * cb);
    return out;
}

SymbolicWeight operator*(SymbolicWeight a, const Rat& c) {
    a *= c;
    return a;
}

SymbolicWeight SymbolicWeight::substitute(
    const std::map<FSymbol, SymbolicWeight>& table) const {
    SymbolicWeight out;
    for (const auto& [m, c] : terms_) {
        SymbolicWeight prod = SymbolicWeight::kappa_power(m.kappa) * c;
        for (const auto& [sym, power] : m.factors) {
            const auto it = table.find(sym);
            for (int k = 0; k < power; ++k)
                prod = it == table.end() ? prod * SymbolicWeight::symbol(sym)
                                         : prod * it->second;
        }
        out += prod;
    }
    return out;
}

Rat SymbolicWeight::evaluate(const FeynmanAssignment& a) const {
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int k = 0; k < m.kappa; ++k) v *= a.kappa;
        if (m.kappa < 0) {
            if (a.kappa == 0) throw std::domain_error("evaluate: kappa^-1 at kappa = 0");
            for (int k = 0; k > m.kappa; --k) v /= a.kappa;
        }
        for (const auto& [sym, power] : m.factors) {
            const auto it = a.values.find({sym.g, sym.n});
            if (it == a.values.end())
                throw std::domain_error("evaluate: no value assigned to F_{" +
                                        std::to_string(sym.g) + "," +
                                        std::to_string(sym.n) + "}");
            for (int k = 0; k < power; ++k) v *= it->second;
        }
        total += v;
    }
    return total;
}

SymbolicWeight SymbolicWeight::kappa_zero() const {
    SymbolicWeight out;
    for (const auto& [m, c] : terms_)
        if (m.kappa == 0) out.add_term(m, c);
    return out;
}

SymbolicWeight graph_weight(const StableGraph& g) {
    if (!is_stable(g)) throw std::domain_error("graph_weight: graph is not stable");
    if (!g.is_connected()) throw std::domain_error("graph_weight: graph is disconnected");
    Monomial m;
    m.kappa = g.num_edges();
    std::map<FSymbol, int> fac;
    for (int v = 0; v < g.num_vertices(); ++v)
        fac[FSymbol{g.vertices()[v].genus, g.valence(v)}] += 1;
    m.factors.assign(fac.begin(), fac.end());
    SymbolicWeight w;
    w.add_term(std::move(m), 1);
    return w;
}

SymbolicWeight graph_sum_forward(CatalogStore& store, int g, int n) {
    const GraphCatalog& cat = store.get(g, n);
    SymbolicWeight sum;
    for (int i = 0; i < cat.size(); ++i)
        sum += graph_weight(cat.at(i).graph) * (Rat(1) / Rat(cat.at(i).aut));
    sum *= Rat(factorial(static_cast<unsigned>(n)));
    return sum;
}

SymbolicWeight graph_sum_inverse(CatalogStore& store, int g, int n) {
    const GraphCatalog& cat = store.get(g, n);
    SymbolicWeight sum;
    for (int i = 0; i < cat.size(); ++i) {
        const int sign = cat.at(i).graph.num_edges() % 2 ? -1 : 1;
        sum += graph_weight(cat.at(i).graph) * (Rat(sign) / Rat(cat.at(i).aut));
    }
    sum *= Rat(factorial(static_cast<unsigned>(n)));
    return sum;
}

SymbolicWeight gtilde_of_graph(CatalogStore& store, const ContractionPoset& poset,
                               int index) {
    const GraphCatalog& cat = poset.catalog();
    const IncidenceFunction zt = generalized_zeta(poset);
    SymbolicWeight by_sum;
    for (int y = 0; y < poset.size(); ++y)
        if (poset.leq(y, index))
            by_sum += graph_weight(cat.at(y).graph) * zt.at(y, index);

    const StableGraph& gamma = cat.at(index).graph;
    SymbolicWeight by_product = SymbolicWeight::kappa_power(gamma.num_edges());
    for (int v = 0; v < gamma.num_vertices(); ++v)
        by_product = by_product *
                     graph_sum_forward(store, gamma.vertices()[v].genus, gamma.valence(v));

    if (!(by_sum == by_product))
        throw std::runtime_error(
            "gtilde_of_graph: interval sum and product form disagree at index " +
            std::to_string(index));
    return by_sum;
}

}  // namespace sgm
