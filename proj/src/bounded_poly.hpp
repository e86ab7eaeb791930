#pragma once

#include <vector>

#include "permcount/big_count.hpp"

namespace permcount::detail {

// Multiplies the truncated polynomial `coef` (degree coef.size()-1) by
// 1 + x + ... + x^block in place, via the sliding-window prefix trick.
inline void multiply_bounded_ones(std::vector<BigCount>& coef, Int block) {
  const std::size_t size = coef.size();
  std::vector<BigCount> prefix(size);
  BigCount run = 0;
  for (std::size_t j = 0; j < size; ++j) {
    run += coef[j];
    prefix[j] = run;
  }
  for (std::size_t j = 0; j < size; ++j) {
    const std::size_t width = static_cast<std::size_t>(block) + 1;
    coef[j] = (j >= width) ? prefix[j] - prefix[j - width] : prefix[j];
  }
}

}  // namespace permcount::detail
