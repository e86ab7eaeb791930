#pragma once

#include "permcount/big_count.hpp"
#include "permcount/partition_diagram.hpp"

namespace permcount {

// Split count J: the number of ways to apportion n2 second-kind objects
// within a fixed ordered occupancy row, i.e. the number of integer vectors
// (v_1..v_m) with 0 <= v_q <= a_q and sum v_q = n2. Computed as the
// coefficient of x^n2 in prod_q (1 + x + ... + x^{a_q}) by a dense
// truncated product, O(m * n2^2) at worst; empty boxes force v_q = 0.
// Depends only on the occupancy multiset.
BigCount splits_count(const OccupancyRow& row, Int n2);

// General two-kind bounded linear count: sum over the capped diagram tail
// of splits_count(row, n2) * row_permutations(row). Reduces to the
// single-kind diagram count at n2 = 0.
BigCount count_two_kinds_linear(Int m, Int n1, Int n2, Int cap);

}  // namespace permcount
