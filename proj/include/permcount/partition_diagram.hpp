#pragma once

#include <optional>
#include <vector>

#include "permcount/big_count.hpp"

namespace permcount {

// One row of the modified partition diagram: the m box occupancies in
// nonincreasing order, summing to the object count n. Trailing zeros pad
// every partition to exactly m entries.
struct OccupancyRow {
  std::vector<Int> occupancies;

  Int boxes() const { return static_cast<Int>(occupancies.size()); }
  Int total() const;
};

// Run lengths of the distinct occupancy values of a row, in descending
// value order, with the count of empty boxes appended last (it may be 0
// and is omitted only for the all-zero row, whose sole block is the zero
// count itself). Entries always sum to m.
struct MultiplicityRow {
  std::vector<Int> multiplicities;

  Int zero_boxes() const { return multiplicities.back(); }
};

// Materialized diagram for (m, n): every partition of n into at most m
// parts, reverse-lexicographically descending. Row indices are 1-based
// throughout, matching the i_l convention.
struct Diagram {
  Int m = 0;
  Int n = 0;
  std::vector<OccupancyRow> rows;

  Int row_count() const { return static_cast<Int>(rows.size()); }
};

// Streams diagram rows one at a time without materializing the diagram.
// With max_part set, the scan starts directly at the first row whose
// leading entry is <= max_part, i.e. at row i_l; by the diagram ordering
// every later row also satisfies the bound.
class DiagramScan {
 public:
  DiagramScan(Int m, Int n);                // all rows
  DiagramScan(Int m, Int n, Int max_part);  // max_part >= 0

  // Fills `row` with the next diagram row; false once exhausted.
  bool next(OccupancyRow& row);

 private:
  bool advance();

  Int m_ = 0;
  Int n_ = 0;
  std::vector<Int> parts_;
  bool fresh_ = false;  // parts_ holds a not-yet-returned row
};

Diagram generate_diagram(Int m, Int n);

MultiplicityRow multiplicities(const OccupancyRow& row);

// m! / prod(multiplicities!): the distinct linear orderings of the row's
// occupancy multiset.
BigCount row_permutations(const OccupancyRow& row);

// Number of nonzero occupancies (m-tilde in the two-kind counters).
Int occupied_boxes(const OccupancyRow& row);

// 1-based index of the first row whose largest part is <= cap; nullopt
// when no row qualifies (cap * m < n, or cap = 0 with n > 0).
std::optional<Int> first_row_with_cap(const Diagram& diagram, Int cap);

// Linear bounded count over the diagram tail: sum of row_permutations over
// rows i_l..k. 0 when no row qualifies, 1 when n = 0.
BigCount count_linear_diagram(Int m, Int n, Int cap);

}  // namespace permcount
