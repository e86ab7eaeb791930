#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permcount/big_count.hpp"
#include "permcount/linear_counts.hpp"
#include "permcount/oracle.hpp"

namespace permcount {

enum class Method {
  auto_select,
  incexc,
  diagram,
  gf,
  burnside,
  oracle,
  paper_eq15,
  paper_eq16,
  paper_eq17,
  paper_eq18,
  paper_eq25,
  paper_eq26,
  paper_eq27,
};

std::string_view method_name(Method method);
Method parse_method(std::string_view name);  // throws UsageError

// Either one cap for every box or a per-group list totalling m boxes.
struct CapSpec {
  std::optional<Int> uniform;
  std::optional<BoxGroupSpec> groups;
};

struct CountQuery {
  Arrangement arrangement = Arrangement::linear;
  Int m = 0;
  std::vector<Int> kinds;  // n1 [, n2 [, n3]]
  CapSpec caps;
  Method method = Method::auto_select;
};

struct CountReport {
  CountQuery query;
  Method resolved = Method::auto_select;
  BigCount count;
  std::vector<std::string> warnings;
  Int elapsed_ms = 0;
};

// Dispatches the query to the matching counter. `auto` picks the preferred
// general method for the shape; the restricted paper-eq* methods must be
// requested explicitly. Throws UsageError for inadmissible
// method/arrangement/kind combinations and FormulaRangeError when a
// restricted formula is asked outside its range.
CountReport run_count_query(const CountQuery& query);

// Methods admissible for the query's shape, auto excluded.
std::vector<Method> admissible_methods(const CountQuery& query);

// Runs every admissible non-paper method and reports disagreements;
// empty result means all routes agree.
std::vector<std::string> cross_check_query(const CountQuery& query);

// Human-readable admissibility table for usage errors and --help.
std::string admissibility_table();

std::string report_to_json(const CountReport& report);  // the stable machine format
std::string report_to_csv(const CountReport& report);   // header + one row
std::string report_to_text(const CountReport& report);  // bare decimal count

}  // namespace permcount
