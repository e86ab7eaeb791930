#include <doctest.h>

#include "formula_refs.hpp"
#include "permcount/core_math.hpp"
#include "permcount/linear_counts.hpp"
#include "permcount/partition_diagram.hpp"

using namespace permcount;

namespace {

std::vector<std::vector<Int>> rows_of(const Diagram& d) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : d.rows) out.push_back(r.occupancies);
  return out;
}

}  // namespace

TEST_CASE("diagram for m=3 n=3") {
  const auto d = generate_diagram(3, 3);
  CHECK(rows_of(d) == std::vector<std::vector<Int>>{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}});
  CHECK(d.row_count() == 3);
}

TEST_CASE("diagram for m=8 n=7 reproduces the 15 published rows") {
  const std::vector<std::vector<Int>> expected = {
      {7, 0, 0, 0, 0, 0, 0, 0}, {6, 1, 0, 0, 0, 0, 0, 0}, {5, 2, 0, 0, 0, 0, 0, 0},
      {5, 1, 1, 0, 0, 0, 0, 0}, {4, 3, 0, 0, 0, 0, 0, 0}, {4, 2, 1, 0, 0, 0, 0, 0},
      {4, 1, 1, 1, 0, 0, 0, 0}, {3, 3, 1, 0, 0, 0, 0, 0}, {3, 2, 2, 0, 0, 0, 0, 0},
      {3, 2, 1, 1, 0, 0, 0, 0}, {3, 1, 1, 1, 1, 0, 0, 0}, {2, 2, 2, 1, 0, 0, 0, 0},
      {2, 2, 1, 1, 1, 0, 0, 0}, {2, 1, 1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 1, 0}};
  CHECK(rows_of(generate_diagram(8, 7)) == expected);
}

TEST_CASE("diagram edge cases") {
  CHECK(rows_of(generate_diagram(1, 5)) == std::vector<std::vector<Int>>{{5}});
  CHECK(rows_of(generate_diagram(4, 0)) == std::vector<std::vector<Int>>{{0, 0, 0, 0}});
  CHECK_THROWS_AS(generate_diagram(0, 3), std::domain_error);
  CHECK_THROWS_AS(generate_diagram(3, -1), std::domain_error);
}

TEST_CASE("diagram rows are valid partitions in strictly descending reverse-lex order") {
  for (Int m = 1; m <= 6; ++m)
    for (Int n = 0; n <= 10; ++n) {
      const auto d = generate_diagram(m, n);
      for (std::size_t i = 0; i < d.rows.size(); ++i) {
        const auto& occ = d.rows[i].occupancies;
        CHECK(static_cast<Int>(occ.size()) == m);
        CHECK(d.rows[i].total() == n);
        for (std::size_t q = 1; q < occ.size(); ++q) CHECK(occ[q - 1] >= occ[q]);
        if (i > 0) {
          CHECK(d.rows[i - 1].occupancies > occ);
          CHECK(d.rows[i - 1].occupancies.front() >= occ.front());
        }
      }
    }
}

TEST_CASE("row count matches the partition recurrence") {
  for (Int m = 1; m <= 8; ++m)
    for (Int n = 0; n <= 14; ++n)
      CHECK(BigCount(generate_diagram(m, n).row_count()) == testrefs::partition_count(n, m));
}

TEST_CASE("multiplicities") {
  CHECK(multiplicities({{3, 0, 0}}).multiplicities == std::vector<Int>({1, 2}));
  CHECK(multiplicities({{2, 1, 0}}).multiplicities == std::vector<Int>({1, 1, 1}));
  CHECK(multiplicities({{1, 1, 1}}).multiplicities == std::vector<Int>({3, 0}));
  CHECK(multiplicities({{0, 0}}).multiplicities == std::vector<Int>({2}));
  CHECK(multiplicities({{3, 3, 1, 0, 0, 0, 0, 0}}).multiplicities == std::vector<Int>({2, 1, 5}));

  for (Int m = 1; m <= 6; ++m)
    for (Int n = 0; n <= 9; ++n)
      for (const auto& row : generate_diagram(m, n).rows) {
        const auto mult = multiplicities(row);
        Int total = 0;
        for (Int v : mult.multiplicities) total += v;
        CHECK(total == m);  // fixed row sum
        CHECK(mult.zero_boxes() == m - occupied_boxes(row));
      }
}

TEST_CASE("row permutations") {
  CHECK(row_permutations({{3, 0, 0}}) == 3);
  CHECK(row_permutations({{2, 1, 0}}) == 6);
  CHECK(row_permutations({{1, 1, 1}}) == 1);
  CHECK(row_permutations({{0, 0, 0}}) == 1);
}

TEST_CASE("permutation totals match the unrestricted count") {
  for (Int m = 1; m <= 6; ++m)
    for (Int n = 0; n <= 10; ++n) {
      BigCount total = 0;
      for (const auto& row : generate_diagram(m, n).rows) total += row_permutations(row);
      CHECK(total == binomial(m + n - 1, n));
    }
}

TEST_CASE("occupied boxes") {
  CHECK(occupied_boxes({{3, 3, 1, 0, 0, 0, 0, 0}}) == 3);
  CHECK(occupied_boxes({{3, 2, 1, 1, 0, 0, 0, 0}}) == 4);
  CHECK(occupied_boxes({{0, 0, 0}}) == 0);
}

TEST_CASE("first row within a cap") {
  const auto big = generate_diagram(8, 7);
  CHECK(first_row_with_cap(big, 3) == 8);
  CHECK(first_row_with_cap(big, 2) == 12);
  CHECK(first_row_with_cap(big, 7) == 1);
  CHECK(first_row_with_cap(big, 0) == std::nullopt);

  CHECK(first_row_with_cap(generate_diagram(3, 3), 3) == 1);
  CHECK(first_row_with_cap(generate_diagram(2, 7), 3) == std::nullopt);  // 2*3 < 7
}

TEST_CASE("scan with a part bound starts at the i_l row") {
  for (Int m = 1; m <= 5; ++m)
    for (Int n = 0; n <= 8; ++n) {
      const auto d = generate_diagram(m, n);
      for (Int cap = 0; cap <= n; ++cap) {
        std::vector<std::vector<Int>> filtered;
        for (const auto& row : d.rows)
          if (row.occupancies.front() <= cap) filtered.push_back(row.occupancies);
        DiagramScan scan(m, n, cap);
        OccupancyRow row;
        std::vector<std::vector<Int>> streamed;
        while (scan.next(row)) streamed.push_back(row.occupancies);
        CHECK(streamed == filtered);
      }
    }
}

TEST_CASE("bounded diagram count") {
  CHECK(count_linear_diagram(3, 3, 3) == 10);
  CHECK(count_linear_diagram(3, 4, 2) == 6);
  CHECK(count_linear_diagram(3, 6, 2) == 1);
  CHECK(count_linear_diagram(5, 0, 0) == 1);
  CHECK(count_linear_diagram(3, 2, 0) == 0);
  CHECK(count_linear_diagram(2, 7, 3) == 0);  // cap*m < n
}

TEST_CASE("diagram count agrees with inclusion-exclusion") {
  for (Int m = 1; m <= 5; ++m)
    for (Int n = 0; n <= 10; ++n)
      for (Int cap = 0; cap <= n; ++cap)
        CHECK(count_linear_diagram(m, n, cap) == count_linear_incexc(m, n, cap));
}
