#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "permcount/big_count.hpp"
#include "permcount/linear_counts.hpp"

namespace permcount {

// Parameter ranges swept by the circular comparison harness. Uniform-cap
// points cover m <= max_m, n1 >= n2, n1 + n2 <= max_total, cap 0..n.
// Group points cover every two-group split of m with distinct caps up to
// max_group_cap, restricted to the range where the grouped formula is
// defined.
struct ComparisonGrid {
  Int max_m = 3;
  Int max_total = 5;
  Int max_group_cap = 3;
};

struct UniformRecord {
  Int m = 0, n1 = 0, n2 = 0, cap = 0;
  BigCount eq27;
  std::optional<BigCount> eq25;  // only inside the restricted range
  BigCount burnside;
  BigCount oracle;

  bool ref_match() const { return burnside == oracle; }
  bool eq27_match() const { return eq27 == oracle; }
  std::optional<bool> eq25_match() const;
};

struct GroupRecord {
  BoxGroupSpec spec;
  Int n1 = 0, n2 = 0;
  BigCount eq26;
  BigCount oracle;  // caps fixed to positions, contiguous arcs in group order

  bool eq26_match() const { return eq26 == oracle; }
};

struct ComparisonReport {
  ComparisonGrid grid;
  std::vector<UniformRecord> uniform;
  std::vector<GroupRecord> groups;

  Int ref_mismatches() const;
  Int eq27_mismatches() const;
  Int eq25_mismatches() const;
  Int eq26_mismatches() const;
  bool references_ok() const { return ref_mismatches() == 0; }
};

// Evaluates the literal published formulas, the Burnside reference and the
// rotation-class oracle on every grid point. Reports, never asserts,
// formula-vs-oracle agreement; a burnside-vs-oracle mismatch is a build
// defect and is what references_ok() checks.
ComparisonReport build_comparison_report(const ComparisonGrid& grid);

// Line-delimited record format with a summary footer; field names are
// pinned by golden files.
void write_comparison_report(const ComparisonReport& report, std::ostream& os);

std::string group_spec_label(const BoxGroupSpec& spec);

}  // namespace permcount
