#include "permcount/partition_diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "permcount/core_math.hpp"

namespace permcount {

Int OccupancyRow::total() const {
  return std::accumulate(occupancies.begin(), occupancies.end(), Int{0});
}

DiagramScan::DiagramScan(Int m, Int n) : DiagramScan(m, n, n < 0 ? 0 : n) {}

DiagramScan::DiagramScan(Int m, Int n, Int max_part) : m_(m), n_(n) {
  if (m < 1) throw std::domain_error("diagram: m must be >= 1");
  if (n < 0) throw std::domain_error("diagram: n must be >= 0");
  if (max_part < 0) throw std::domain_error("diagram: max_part must be >= 0");

  // Seed with the reverse-lexicographically largest row: fill greedily
  // left to right, each entry bounded by max_part.
  parts_.assign(static_cast<std::size_t>(m), 0);
  Int bound = std::min(n, max_part);
  Int remaining = n;
  for (Int q = 0; q < m && remaining > 0; ++q) {
    Int v = std::min(bound, remaining);
    parts_[static_cast<std::size_t>(q)] = v;
    remaining -= v;
    bound = v;
  }
  fresh_ = (remaining == 0);
}

bool DiagramScan::advance() {
  // Successor in reverse-lexicographic descending order: lower the
  // rightmost entry that still lets the tail absorb the remainder, then
  // refill the tail greedily. Position j is feasible iff the objects at
  // j..m-1 fit into m-j slots of size parts_[j]-1.
  Int suffix = 0;
  for (Int j = m_ - 1; j >= 0; --j) {
    suffix += parts_[static_cast<std::size_t>(j)];
    Int v = parts_[static_cast<std::size_t>(j)] - 1;
    if (v < 1) continue;
    Int slots = m_ - j;
    if (suffix > v * slots) continue;
    parts_[static_cast<std::size_t>(j)] = v;
    Int remaining = suffix - v;
    for (Int q = j + 1; q < m_; ++q) {
      Int t = std::min(parts_[static_cast<std::size_t>(q - 1)], remaining);
      parts_[static_cast<std::size_t>(q)] = t;
      remaining -= t;
    }
    assert(remaining == 0);
    return true;
  }
  return false;
}

bool DiagramScan::next(OccupancyRow& row) {
  if (!fresh_) return false;
  row.occupancies = parts_;
  fresh_ = advance();
  return true;
}

Diagram generate_diagram(Int m, Int n) {
  Diagram d;
  d.m = m;
  d.n = n;
  DiagramScan scan(m, n);
  OccupancyRow row;
  while (scan.next(row)) d.rows.push_back(row);
  return d;
}

MultiplicityRow multiplicities(const OccupancyRow& row) {
  MultiplicityRow out;
  const auto& a = row.occupancies;
  std::size_t q = 0;
  while (q < a.size() && a[q] > 0) {
    std::size_t r = q;
    while (r < a.size() && a[r] == a[q]) ++r;
    out.multiplicities.push_back(static_cast<Int>(r - q));
    q = r;
  }
  // Zero-box block, present even when empty; for the all-zero row it is
  // the only block.
  out.multiplicities.push_back(static_cast<Int>(a.size() - q));
  return out;
}

BigCount row_permutations(const OccupancyRow& row) {
  return multinomial(multiplicities(row).multiplicities);
}

Int occupied_boxes(const OccupancyRow& row) {
  return static_cast<Int>(std::count_if(row.occupancies.begin(), row.occupancies.end(),
                                        [](Int a) { return a > 0; }));
}

std::optional<Int> first_row_with_cap(const Diagram& diagram, Int cap) {
  for (std::size_t i = 0; i < diagram.rows.size(); ++i) {
    if (diagram.rows[i].occupancies.front() <= cap) return static_cast<Int>(i + 1);
  }
  return std::nullopt;
}

BigCount count_linear_diagram(Int m, Int n, Int cap) {
  if (cap < 0) throw std::domain_error("count_linear_diagram: cap must be >= 0");
  DiagramScan scan(m, n, cap);
  OccupancyRow row;
  BigCount acc = 0;
  while (scan.next(row)) acc += row_permutations(row);
  return acc;
}

}  // namespace permcount
