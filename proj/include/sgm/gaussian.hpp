#pragma once

#include "sgm/feynman.hpp"
#include "sgm/rational.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace sgm {

// Laurent-truncated series in t (= lambda^2, exponent may be negative), z and
// y, graded by 2a + b + c for a monomial t^a z^b y^c. Every connected source
// term has grade >= 1 and grades add under products, so truncating above
// max_grade is consistent: no kept coefficient depends on a dropped term.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int max_grade) : max_grade_(max_grade) {}

    int max_grade() const { return max_grade_; }
    const std::map<std::tuple<int, int, int>, Rat>& terms() const { return terms_; }
    Rat coeff(int t, int z, int y) const;
    void add(int t, int z, int y, const Rat& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator*=(const Rat& c);

private:
    int max_grade_;
    std::map<std::tuple<int, int, int>, Rat> terms_;
};

// exp(s) for a series with no grade-0 part: the power sum terminates exactly.
TruncatedSeries series_exp(const TruncatedSeries& s);
// log(1 + w) for w with no grade-0 part; exact for the same reason.
TruncatedSeries series_log1p(const TruncatedSeries& w);

// The formal Gaussian functional: y^{2m} -> (2m-1)!! (t kappa)^m, odd powers
// of y -> 0, applied termwise. The normalization constant is folded into the
// m = 0 case (y^0 -> 1).
TruncatedSeries wick_integrate(const TruncatedSeries& s, const Rat& kappa);

// Computes every F~_{g,n} with 1 <= 2g-2+n <= max_grade from the assignment,
// by shifting x = z + y, exponentiating, integrating out y and taking log.
// A graph-free oracle for the catalog sums.
std::map<std::pair<int, int>, Rat> gaussian_forward(const FeynmanAssignment& a,
                                                    int max_grade);

struct GaussianRoundtrip {
    bool ok = true;
    // (g, n) -> (input, forward, recovered)
    std::map<std::pair<int, int>, std::tuple<Rat, Rat, Rat>> rows;
};

// Forward with kappa, then forward again with -kappa; exact recovery expected.
GaussianRoundtrip gaussian_roundtrip(const FeynmanAssignment& a, int max_grade);

}  // namespace sgm
