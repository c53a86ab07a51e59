#include "sgm/rational.hpp"

#include <stdexcept>

namespace sgm {

std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> Int {
        if (t.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t i = 0;
        if (t[0] == '+' || t[0] == '-') i = 1;
        if (i == t.size()) throw std::invalid_argument("sign without digits in rational literal");
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9')
                throw std::invalid_argument("bad digit in rational literal");
        return Int(std::string(t));
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    const Int num = parse_int(s.substr(0, slash));
    const Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rat(num, den);
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step: r is a binomial coefficient
    }
    return r;
}

Int double_factorial_odd(unsigned m) {
    Int r = 1;
    for (unsigned k = 1; k <= m; ++k) r *= 2 * k - 1;
    return r;
}

}  // namespace sgm
