#include "sgm/gaussian.hpp"

#include <stdexcept>

namespace sgm {

namespace {

int grade(int t, int z, int y) { return 2 * t + z + y; }

}  // namespace

Rat TruncatedSeries::coeff(int t, int z, int y) const {
    const auto it = terms_.find({t, z, y});
    return it == terms_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::add(int t, int z, int y, const Rat& c) {
    if (c == 0 || grade(t, z, y) > max_grade_) return;
    const auto key = std::make_tuple(t, z, y);
    const auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    for (const auto& [k, c] : o.terms_) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.max_grade_, b.max_grade_));
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add(std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
                    std::get<2>(ka) + std::get<2>(kb), ca * cb);
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    for (const auto& [k, c] : s.terms())
        if (grade(std::get<0>(k), std::get<1>(k), std::get<2>(k)) < 1)
            throw std::domain_error("series_exp: input has a term of grade < 1");
    TruncatedSeries out(s.max_grade());
    out.add(0, 0, 0, 1);
    TruncatedSeries power(s.max_grade());
    power.add(0, 0, 0, 1);
    Rat inv_fact = 1;
    // s^m only holds grades >= m, so the sum below is exact, not truncated
    for (int m = 1; m <= s.max_grade(); ++m) {
        power = power * s;
        inv_fact /= m;
        TruncatedSeries scaled = power;
        scaled *= inv_fact;
        out += scaled;
    }
    return out;
}

TruncatedSeries series_log1p(const TruncatedSeries& w) {
    for (const auto& [k, c] : w.terms())
        if (grade(std::get<0>(k), std::get<1>(k), std::get<2>(k)) < 1)
            throw std::domain_error("series_log1p: input has a term of grade < 1");
    TruncatedSeries out(w.max_grade());
    TruncatedSeries power(w.max_grade());
    power.add(0, 0, 0, 1);
    for (int m = 1; m <= w.max_grade(); ++m) {
        power = power * w;
        TruncatedSeries scaled = power;
        scaled *= Rat(m % 2 ? 1 : -1) / Rat(m);
        out += scaled;
    }
    return out;
}

TruncatedSeries wick_integrate(const TruncatedSeries& s, const Rat& kappa) {
    TruncatedSeries out(s.max_grade());
    for (const auto& [k, c] : s.terms()) {
        const int y = std::get<2>(k);
        if (y % 2) continue;
        const int m = y / 2;
        Rat v = c * Rat(double_factorial_odd(static_cast<unsigned>(m)));
        for (int i = 0; i < m; ++i) v *= kappa;
        out.add(std::get<0>(k) + m, std::get<1>(k), 0, v);
    }
    return out;
}

std::map<std::pair<int, int>, Rat> gaussian_forward(const FeynmanAssignment& a,
                                                    int max_grade) {
    if (max_grade < 1) throw std::domain_error("gaussian_forward: max_grade must be >= 1");

    // S(z + y) = sum over sources of t^{g-1} F_{g,n} (z+y)^n / n!
    TruncatedSeries source(max_grade);
    for (int g = 0; 2 * g - 2 <= max_grade; ++g)
        for (int n = 0; 2 * g - 2 + n <= max_grade; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            const auto it = a.values.find({g, n});
            if (it == a.values.end())
                throw std::domain_error("gaussian_forward: assignment misses F_{" +
                                        std::to_string(g) + "," + std::to_string(n) + "}");
            const Rat base = it->second / Rat(factorial(static_cast<unsigned>(n)));
            for (int k = 0; k <= n; ++k)
                source.add(g - 1, k, n - k,
                           base * Rat(binomial(static_cast<unsigned>(n),
                                               static_cast<unsigned>(k))));
        }

    const TruncatedSeries integrated = wick_integrate(series_exp(source), a.kappa);

    // integrated = 1 + higher grades; read F~ off the log
    TruncatedSeries w = integrated;
    w.add(0, 0, 0, -1);
    const TruncatedSeries logged = series_log1p(w);

    std::map<std::pair<int, int>, Rat> out;
    for (int g = 0; 2 * g - 2 <= max_grade; ++g)
        for (int n = 0; 2 * g - 2 + n <= max_grade; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            out[{g, n}] =
                logged.coeff(g - 1, n, 0) * Rat(factorial(static_cast<unsigned>(n)));
        }
    return out;
}

GaussianRoundtrip gaussian_roundtrip(const FeynmanAssignment& a, int max_grade) {
    const auto forward = gaussian_forward(a, max_grade);
    FeynmanAssignment back;
    back.values = forward;
    back.kappa = -a.kappa;
    const auto recovered = gaussian_forward(back, max_grade);

    GaussianRoundtrip report;
    for (const auto& [key, value] : forward) {
        const Rat input = a.values.at(key);
        const Rat rec = recovered.at(key);
        report.rows[key] = {input, value, rec};
        if (rec != input) report.ok = false;
    }
    return report;
}

}  // namespace sgm
