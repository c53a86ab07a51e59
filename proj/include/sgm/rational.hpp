#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sgm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders "p" for integers, "p/q" otherwise, q > 0, gcd(p,q) = 1.
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rat rat_from_string(std::string_view s);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// (2m-1)!! with the empty-product convention (m = 0 -> 1).
Int double_factorial_odd(unsigned m);

}  // namespace sgm
