#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "permcount/big_count.hpp"

namespace permcount {

// C(a, b) under the zero convention: 0 whenever b < 0, a < 0 or b > a.
// The convention makes all inclusion-exclusion sums self-truncating.
BigCount binomial(Int a, Int b);

// (sum parts)! / prod(parts!). All parts must be >= 0.
BigCount multinomial(std::span<const Int> parts);
BigCount multinomial(std::initializer_list<Int> parts);

// Euler's phi(d), d >= 1.
Int euler_totient(Int d);

// All divisors of x >= 1, ascending.
std::vector<Int> divisors(Int x);

// gcd of the nonzero elements; zeros are ignored, all-zero input is a
// domain error.
Int gcd_tuple(std::span<const Int> xs);
Int gcd_tuple(std::initializer_list<Int> xs);

}  // namespace permcount
