#include "permcount/circular_counts.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "permcount/core_math.hpp"
#include "permcount/errors.hpp"
#include "permcount/partition_diagram.hpp"
#include "permcount/two_kinds.hpp"

namespace permcount {

namespace {

// Multiplicity tuple as circle blocks: drop the zero-box block only when
// it is empty. The all-zero row keeps its single block.
std::vector<Int> necklace_blocks(const OccupancyRow& row) {
  auto blocks = multiplicities(row).multiplicities;
  if (blocks.size() > 1 && blocks.back() == 0) blocks.pop_back();
  return blocks;
}

BigCount exact_orbit_average(BigCount weighted, Int group_order, const char* where) {
  if (weighted % group_order != 0)
    throw std::logic_error(std::string(where) + ": totient-weighted sum not divisible by the group order");
  return weighted / group_order;
}

// Number of length-p sequences of per-box pairs (u, v) with u + v <= cap,
// sum u = s1, sum v = s2. Exact DP, one box at a time.
BigCount bounded_pair_sequences(Int p, Int s1, Int s2, Int cap) {
  const std::size_t w1 = static_cast<std::size_t>(s1) + 1;
  const std::size_t w2 = static_cast<std::size_t>(s2) + 1;
  std::vector<BigCount> dp(w1 * w2), next(w1 * w2);
  dp[0] = 1;
  for (Int box = 0; box < p; ++box) {
    std::fill(next.begin(), next.end(), BigCount(0));
    for (Int u = 0; u <= s1; ++u)
      for (Int v = 0; v <= s2; ++v) {
        const BigCount& reach = dp[static_cast<std::size_t>(u) * w2 + static_cast<std::size_t>(v)];
        if (reach == 0) continue;
        for (Int du = 0; du <= std::min(cap, s1 - u); ++du)
          for (Int dv = 0; dv <= std::min(cap - du, s2 - v); ++dv)
            next[static_cast<std::size_t>(u + du) * w2 + static_cast<std::size_t>(v + dv)] += reach;
      }
    dp.swap(next);
  }
  return dp[static_cast<std::size_t>(s1) * w2 + static_cast<std::size_t>(s2)];
}

void check_circular_args(Int m, Int n1, Int n2, Int cap, const char* where) {
  if (m < 1) throw std::domain_error(std::string(where) + ": m must be >= 1");
  if (n1 < 0 || n2 < 0) throw std::domain_error(std::string(where) + ": kind counts must be >= 0");
  if (cap < 0) throw std::domain_error(std::string(where) + ": cap must be >= 0");
}

// Unrestricted circular total of n objects in m boxes (cap never binds).
BigCount circular_total(Int m, Int n) { return count_circular(m, n, n); }

}  // namespace

BigCount necklace_multinomial(std::span<const Int> parts) {
  if (parts.empty()) throw std::domain_error("necklace_multinomial: empty tuple");
  Int total = 0;
  for (Int p : parts) {
    if (p < 1) throw std::domain_error("necklace_multinomial: parts must be >= 1");
    total += p;
  }
  const Int g = gcd_tuple(parts);
  std::vector<Int> scaled(parts.size());
  BigCount weighted = 0;
  for (Int d : divisors(g)) {
    for (std::size_t i = 0; i < parts.size(); ++i) scaled[i] = parts[i] / d;
    weighted += euler_totient(d) * multinomial(scaled);
  }
  return exact_orbit_average(std::move(weighted), total, "necklace_multinomial");
}

BigCount necklace_multinomial(std::initializer_list<Int> parts) {
  return necklace_multinomial(std::span<const Int>(parts.begin(), parts.size()));
}

BigCount count_circular(Int m, Int n, Int cap) {
  check_circular_args(m, n, 0, cap, "count_circular");
  DiagramScan scan(m, n, cap);
  OccupancyRow row;
  BigCount acc = 0;
  while (scan.next(row)) acc += necklace_multinomial(necklace_blocks(row));
  return acc;
}

BigCount circular_excess(Int m, Int n, Int cap) {
  check_circular_args(m, n, 0, cap, "circular_excess");
  return count_circular(m, n, n) - count_circular(m, n, cap);
}

BigCount count_circular_burnside(Int m, Int n, Int cap) {
  check_circular_args(m, n, 0, cap, "count_circular_burnside");
  BigCount weighted = 0;
  for (Int p : divisors(m)) {
    const Int repeats = m / p;
    if (n % repeats != 0) continue;  // no arrangement has this period
    weighted += euler_totient(repeats) * count_linear_incexc(p, n / repeats, cap);
  }
  return exact_orbit_average(std::move(weighted), m, "count_circular_burnside");
}

BigCount count_two_kinds_circular_paper(Int m, Int n1, Int n2, Int cap) {
  check_circular_args(m, n1, n2, cap, "count_two_kinds_circular_paper");
  DiagramScan scan(m, n1 + n2, cap);
  OccupancyRow row;
  BigCount acc = 0;
  while (scan.next(row))
    acc += splits_count(row, n2) * necklace_multinomial(necklace_blocks(row));
  return acc;
}

BigCount count_two_kinds_circular_burnside(Int m, Int n1, Int n2, Int cap) {
  check_circular_args(m, n1, n2, cap, "count_two_kinds_circular_burnside");
  BigCount weighted = 0;
  for (Int p : divisors(m)) {
    const Int repeats = m / p;
    if (n1 % repeats != 0 || n2 % repeats != 0) continue;
    weighted += euler_totient(repeats) * bounded_pair_sequences(p, n1 / repeats, n2 / repeats, cap);
  }
  return exact_orbit_average(std::move(weighted), m, "count_two_kinds_circular_burnside");
}

bool eq25_in_range(Int m, Int n1, Int n2, Int cap) {
  const Int n = n1 + n2;
  return m >= 2 && n2 <= n1 && cap <= n && n <= 2 * cap + 1;
}

BigCount count_two_kinds_circular_restricted_paper(Int m, Int n1, Int n2, Int cap) {
  check_circular_args(m, n1, n2, cap, "count_two_kinds_circular_restricted_paper");
  const Int n = n1 + n2;
  if (m < 2) throw FormulaRangeError("eq25 requires m >= 2");
  if (!(n2 <= n1)) throw FormulaRangeError("eq25 requires n2 <= n1");
  if (!(cap <= n && n <= 2 * cap + 1))
    throw FormulaRangeError("eq25 requires cap <= n1+n2 <= 2*cap+1");

  BigCount lead = circular_total(m, n1) * circular_total(m, n2);
  BigCount excess = 0;
  for (Int j = 0; j <= n - cap - 1; ++j) {
    const Int alpha = std::min(n2, n - cap - 1 - j);
    for (Int k = 0; k <= alpha; ++k)
      excess += circular_total(m - 1, j) * circular_total(m - 1, k);
  }
  return lead - excess;  // literal value, not clamped; may be negative
}

bool eq26_in_range(const BoxGroupSpec& spec, Int n1, Int n2) {
  if (spec.groups.size() < 2) return false;
  const Int la = spec.min_cap();
  const Int n = n1 + n2;
  return n2 <= n1 && la < n && n <= 2 * la + 1;
}

BigCount count_two_kinds_circular_groups_paper(const BoxGroupSpec& spec, Int n1, Int n2) {
  spec.validate();
  if (n1 < 0 || n2 < 0)
    throw std::domain_error("count_two_kinds_circular_groups_paper: kind counts must be >= 0");
  if (spec.groups.size() < 2)
    throw FormulaRangeError("eq26 requires r >= 2 groups (the single-cap form is eq25)");
  const Int m = spec.total_boxes();
  const Int la = spec.min_cap();
  const Int n = n1 + n2;
  if (!(n2 <= n1)) throw FormulaRangeError("eq26 requires n2 <= n1");
  if (!(la < n && n <= 2 * la + 1))
    throw FormulaRangeError("eq26 requires l_a < n1+n2 <= 2*l_a+1 (l_a = smallest group cap)");

  BigCount lead = circular_total(m, n1) * circular_total(m, n2);
  BigCount excess = 0;
  for (const auto& g : spec.groups) {
    if (n - g.cap - 1 < 0) continue;
    BigCount group_sum = 0;
    for (Int j = 0; j <= n - g.cap - 1; ++j) {
      const Int alpha = std::min(n2, n - g.cap - 1 - j);
      for (Int k = 0; k <= alpha; ++k)
        group_sum += circular_total(m - 1, j) * circular_total(m - 1, k);
    }
    excess += g.boxes * group_sum;
  }
  return lead - excess;  // literal value; may be negative
}

}  // namespace permcount
