#include "sgm/euler.hpp"

#include "sgm/feynman.hpp"

#include <stdexcept>
#include <vector>

namespace sgm {

Rat bernoulli(int k) {
    if (k < 0 || k % 2 != 0)
        throw std::domain_error("bernoulli: index must be a non-negative even integer");
    static std::vector<Rat> cache{Rat(1)};  // B_0
    for (int m = static_cast<int>(cache.size()); m <= k; ++m) {
        // sum_{j=0}^{m} binom(m+1, j) B_j = 0
        Rat acc = 0;
        for (int j = 0; j < m; ++j)
            acc += Rat(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) *
                   cache[j];
        cache.push_back(-acc / Rat(m + 1));
    }
    return cache[k];
}

Rat harer_zagier(int g, int n) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
        throw std::domain_error("harer_zagier: (g,n) violates stability");
    Rat value = Rat(2 * g - 1) * bernoulli(2 * g) /
                Rat(factorial(static_cast<unsigned>(2 * g)));
    value *= Rat(factorial(static_cast<unsigned>(2 * g + n - 3)));
    if (n % 2) value = -value;
    return value;
}

namespace {

FeynmanAssignment hz_assignment(int max_grade) {
    FeynmanAssignment a;
    a.kappa = 1;
    for (int g = 0; 2 * g - 2 <= max_grade; ++g)
        for (int n = 0; 2 * g - 2 + n <= max_grade; ++n)
            if (2 * g - 2 + n > 0) a.values[{g, n}] = harer_zagier(g, n);
    return a;
}

}  // namespace

Rat chi_closed(CatalogStore& store, int g, int n) {
    const int grade = 2 * g - 2 + n;
    return graph_sum_forward(store, g, n).evaluate(hz_assignment(grade));
}

Rat chi_open_inverted(CatalogStore& store, int g, int n) {
    const int grade = 2 * g - 2 + n;
    FeynmanAssignment closed;
    closed.kappa = 1;
    for (int h = 0; 2 * h - 2 <= grade; ++h)
        for (int l = 0; 2 * h - 2 + l <= grade; ++l)
            if (2 * h - 2 + l > 0) closed.values[{h, l}] = chi_closed(store, h, l);
    const Rat inverted = graph_sum_inverse(store, g, n).evaluate(closed);
    if (inverted != harer_zagier(g, n))
        throw std::runtime_error("chi_open_inverted: inversion failed to recover the "
                                 "open value at (" +
                                 std::to_string(g) + "," + std::to_string(n) + ")");
    return inverted;
}

EulerTable euler_table(CatalogStore& store, int max_grade) {
    if (max_grade < 1) throw std::domain_error("euler_table: max_grade must be >= 1");
    EulerTable table;
    table.max_grade = max_grade;

    // cache the closed column once; chi_open_inverted re-derives the open
    // column from it through the sign-flipped sum
    FeynmanAssignment closed;
    closed.kappa = 1;
    const FeynmanAssignment open = hz_assignment(max_grade);
    for (int g = 0; 2 * g - 2 <= max_grade; ++g)
        for (int n = 0; 2 * g - 2 + n <= max_grade; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            closed.values[{g, n}] = graph_sum_forward(store, g, n).evaluate(open);
        }
    for (const auto& [key, chi_c] : closed.values) {
        const auto [g, n] = key;
        const Rat recovered = graph_sum_inverse(store, g, n).evaluate(closed);
        const Rat chi_o = harer_zagier(g, n);
        if (recovered != chi_o)
            throw std::runtime_error("euler_table: roundtrip failed at (" +
                                     std::to_string(g) + "," + std::to_string(n) + ")");
        table.rows[key] = {chi_o, chi_c};
    }
    return table;
}

std::string euler_csv(const EulerTable& table) {
    std::string out = "g,n,chi_open,chi_closed\n";
    for (const auto& [key, value] : table.rows) {
        out += std::to_string(key.first) + "," + std::to_string(key.second) + "," +
               rat_to_string(value.first) + "," + rat_to_string(value.second) + "\n";
    }
    return out;
}

}  // namespace sgm
