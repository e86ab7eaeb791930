#include "permcount/core_math.hpp"

#include <numeric>
#include <stdexcept>

namespace permcount {

BigCount binomial(Int a, Int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigCount r = 1;
  for (Int i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r equals C(a-b+i, i) after each step
  }
  return r;
}

BigCount multinomial(std::span<const Int> parts) {
  BigCount r = 1;
  Int total = 0;
  for (Int p : parts) {
    if (p < 0) throw std::domain_error("multinomial: negative part");
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

BigCount multinomial(std::initializer_list<Int> parts) {
  return multinomial(std::span<const Int>(parts.begin(), parts.size()));
}

Int euler_totient(Int d) {
  if (d < 1) throw std::domain_error("euler_totient: d must be >= 1");
  Int result = d;
  Int rest = d;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<Int> divisors(Int x) {
  if (x < 1) throw std::domain_error("divisors: x must be >= 1");
  std::vector<Int> low, high;
  for (Int d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    low.push_back(d);
    if (d != x / d) high.push_back(x / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Int gcd_tuple(std::span<const Int> xs) {
  Int g = 0;
  for (Int x : xs) {
    if (x < 0) throw std::domain_error("gcd_tuple: negative element");
    g = std::gcd(g, x);
  }
  if (g == 0) throw std::domain_error("gcd_tuple: all elements are zero");
  return g;
}

Int gcd_tuple(std::initializer_list<Int> xs) {
  return gcd_tuple(std::span<const Int>(xs.begin(), xs.size()));
}

}  // namespace permcount
