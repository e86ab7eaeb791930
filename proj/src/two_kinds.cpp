#include "permcount/two_kinds.hpp"

#include <stdexcept>

#include "bounded_poly.hpp"

namespace permcount {

BigCount splits_count(const OccupancyRow& row, Int n2) {
  if (n2 < 0 || n2 > row.total())
    throw std::domain_error("splits_count: n2 must be in 0..sum(row)");
  std::vector<BigCount> coef(static_cast<std::size_t>(n2) + 1);
  coef[0] = 1;
  for (Int a : row.occupancies) {
    if (a == 0) break;  // occupancies are nonincreasing
    detail::multiply_bounded_ones(coef, a);
  }
  return coef[static_cast<std::size_t>(n2)];
}

BigCount count_two_kinds_linear(Int m, Int n1, Int n2, Int cap) {
  if (n1 < 0 || n2 < 0)
    throw std::domain_error("count_two_kinds_linear: kind counts must be >= 0");
  if (cap < 0) throw std::domain_error("count_two_kinds_linear: cap must be >= 0");
  DiagramScan scan(m, n1 + n2, cap);
  OccupancyRow row;
  BigCount acc = 0;
  while (scan.next(row)) acc += splits_count(row, n2) * row_permutations(row);
  return acc;
}

}  // namespace permcount
