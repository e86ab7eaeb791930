#include <doctest.h>

#include "permcount/core_math.hpp"

using namespace permcount;

TEST_CASE("binomial basic values and zero convention") {
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, -3) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("binomial exceeds 64 bits without overflow") {
  // C(100, 50)
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  CHECK(binomial(70, 35) > BigCount(UINT64_MAX));
}

TEST_CASE("pascal recurrence on the 64x64 grid") {
  for (Int a = 1; a <= 64; ++a)
    for (Int b = 1; b <= 64; ++b)
      CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

// m >= 2 only: at m = 1 the zero convention sets every C(i-1, i) term to
// 0, including C(-1, 0), and the sum degenerates.
TEST_CASE("hockey-stick identity") {
  for (Int m = 2; m <= 10; ++m)
    for (Int s = 0; s <= 20; ++s) {
      BigCount lhs = 0;
      for (Int i = 0; i <= s; ++i) lhs += binomial(m - 2 + i, i);
      CHECK(lhs == binomial(m - 1 + s, s));
    }
}

TEST_CASE("multinomial") {
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({3, 3}) == 20);
  CHECK(multinomial({7}) == 1);
  CHECK(multinomial({0}) == 1);
  CHECK(multinomial({2, 0, 1}) == 3);
  CHECK_THROWS_AS(multinomial({2, -1}), std::domain_error);

  for (Int a = 0; a <= 12; ++a)
    for (Int b = 0; b <= 12; ++b)
      CHECK(multinomial({a, b}) == binomial(a + b, a));
}

TEST_CASE("euler totient") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(6) == 2);
  CHECK(euler_totient(9) == 6);
  CHECK(euler_totient(97) == 96);
  CHECK_THROWS_AS(euler_totient(0), std::domain_error);
  CHECK_THROWS_AS(euler_totient(-4), std::domain_error);
}

TEST_CASE("totient divisor sums") {
  for (Int x = 1; x <= 1000; ++x) {
    Int sum = 0;
    for (Int d : divisors(x)) sum += euler_totient(d);
    CHECK(sum == x);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<Int>{1});
  CHECK(divisors(6) == std::vector<Int>({1, 2, 3, 6}));
  CHECK(divisors(12) == std::vector<Int>({1, 2, 3, 4, 6, 12}));
  CHECK(divisors(49) == std::vector<Int>({1, 7, 49}));
  CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("gcd_tuple") {
  CHECK(gcd_tuple({2, 1}) == 1);
  CHECK(gcd_tuple({4, 2, 0}) == 2);
  CHECK(gcd_tuple({3}) == 3);
  CHECK(gcd_tuple({0, 6, 9}) == 3);
  CHECK_THROWS_AS(gcd_tuple({0, 0}), std::domain_error);
}
