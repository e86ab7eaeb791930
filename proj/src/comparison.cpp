#include "permcount/comparison.hpp"

#include <ostream>
#include <sstream>

#include "permcount/circular_counts.hpp"
#include "permcount/oracle.hpp"

namespace permcount {

std::optional<bool> UniformRecord::eq25_match() const {
  if (!eq25) return std::nullopt;
  return *eq25 == oracle;
}

Int ComparisonReport::ref_mismatches() const {
  Int k = 0;
  for (const auto& r : uniform)
    if (!r.ref_match()) ++k;
  return k;
}

Int ComparisonReport::eq27_mismatches() const {
  Int k = 0;
  for (const auto& r : uniform)
    if (!r.eq27_match()) ++k;
  return k;
}

Int ComparisonReport::eq25_mismatches() const {
  Int k = 0;
  for (const auto& r : uniform)
    if (r.eq25_match() == std::optional<bool>(false)) ++k;
  return k;
}

Int ComparisonReport::eq26_mismatches() const {
  Int k = 0;
  for (const auto& r : groups)
    if (!r.eq26_match()) ++k;
  return k;
}

ComparisonReport build_comparison_report(const ComparisonGrid& grid) {
  ComparisonReport report;
  report.grid = grid;

  // Uniform caps: every method is defined everywhere except eq25.
  for (Int m = 1; m <= grid.max_m; ++m)
    for (Int n1 = 0; n1 <= grid.max_total; ++n1)
      for (Int n2 = 0; n2 <= std::min(n1, grid.max_total - n1); ++n2) {
        const Int n = n1 + n2;
        for (Int cap = 0; cap <= n; ++cap) {
          UniformRecord rec;
          rec.m = m;
          rec.n1 = n1;
          rec.n2 = n2;
          rec.cap = cap;
          rec.eq27 = count_two_kinds_circular_paper(m, n1, n2, cap);
          if (eq25_in_range(m, n1, n2, cap))
            rec.eq25 = count_two_kinds_circular_restricted_paper(m, n1, n2, cap);
          rec.burnside = count_two_kinds_circular_burnside(m, n1, n2, cap);
          rec.oracle = oracle_circular(uniform_caps(m, cap), n1, n2, 0);
          report.uniform.push_back(std::move(rec));
        }
      }

  // Two-group splits with distinct caps; only points where the grouped
  // formula is defined become records.
  for (Int m = 2; m <= grid.max_m; ++m)
    for (Int first = 1; first <= m - 1; ++first)
      for (Int cap1 = 0; cap1 <= grid.max_group_cap; ++cap1)
        for (Int cap2 = cap1 + 1; cap2 <= grid.max_group_cap; ++cap2) {
          BoxGroupSpec spec{{{first, cap1}, {m - first, cap2}}};
          for (Int n1 = 0; n1 <= grid.max_total; ++n1)
            for (Int n2 = 0; n2 <= std::min(n1, grid.max_total - n1); ++n2) {
              if (!eq26_in_range(spec, n1, n2)) continue;
              GroupRecord rec;
              rec.spec = spec;
              rec.n1 = n1;
              rec.n2 = n2;
              rec.eq26 = count_two_kinds_circular_groups_paper(spec, n1, n2);
              rec.oracle = oracle_circular(spec.per_box_caps(), n1, n2, 0);
              report.groups.push_back(std::move(rec));
            }
        }

  return report;
}

std::string group_spec_label(const BoxGroupSpec& spec) {
  std::ostringstream os;
  for (std::size_t i = 0; i < spec.groups.size(); ++i) {
    if (i > 0) os << ',';
    os << spec.groups[i].boxes << ':' << spec.groups[i].cap;
  }
  return os.str();
}

void write_comparison_report(const ComparisonReport& report, std::ostream& os) {
  os << "# circular comparison report\n";
  os << "# caps are fixed to box positions; group caps form contiguous arcs in group order\n";
  os << "# grid: max_m=" << report.grid.max_m << " max_total=" << report.grid.max_total
     << " max_group_cap=" << report.grid.max_group_cap << "\n";
  for (const auto& r : report.uniform) {
    os << "uniform m=" << r.m << " n1=" << r.n1 << " n2=" << r.n2 << " cap=" << r.cap
       << " eq27=" << r.eq27 << " eq25=";
    if (r.eq25)
      os << *r.eq25;
    else
      os << "NA";
    os << " burnside=" << r.burnside << " oracle=" << r.oracle
       << " eq27_match=" << (r.eq27_match() ? 1 : 0) << " eq25_match=";
    if (auto m25 = r.eq25_match())
      os << (*m25 ? 1 : 0);
    else
      os << "NA";
    os << " ref_match=" << (r.ref_match() ? 1 : 0) << "\n";
  }
  for (const auto& r : report.groups) {
    os << "groups spec=" << group_spec_label(r.spec) << " n1=" << r.n1 << " n2=" << r.n2
       << " eq26=" << r.eq26 << " oracle=" << r.oracle
       << " eq26_match=" << (r.eq26_match() ? 1 : 0) << "\n";
  }
  os << "# summary: uniform=" << report.uniform.size() << " groups=" << report.groups.size()
     << " ref_mismatches=" << report.ref_mismatches()
     << " eq27_mismatches=" << report.eq27_mismatches()
     << " eq25_mismatches=" << report.eq25_mismatches()
     << " eq26_mismatches=" << report.eq26_mismatches() << "\n";
}

}  // namespace permcount
