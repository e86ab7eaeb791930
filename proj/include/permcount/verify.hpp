#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permcount/big_count.hpp"

namespace permcount {

// Grid bounds for a verification suite; -1 keeps the suite default.
struct SuiteBounds {
  Int max_m = -1;
  Int max_n = -1;
  Int max_l = -1;
  Int max_s = -1;
};

struct SuiteFailure {
  std::string label;   // grid point
  std::string detail;  // expected vs got
};

struct SuiteResult {
  std::string suite;
  Int cases = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

// Named identity/agreement suites runnable from the CLI:
//   eq4             diagram permutation totals vs the unrestricted count
//   eq10            hockey-stick binomial identity
//   eq12            diagram count vs inclusion-exclusion count
//   eq13            full-boxes value I(m, m*l, l) = 1
//   eq14            one-short value I(m, m*l-1, l) = m
//   riordan-limit   extending the alternating sum's upper limit to m
//   method-agreement incexc = diagram = generating-function
//   oracle-linear   incexc vs exhaustive enumeration
//   oracle-circular circular diagram count vs Burnside vs enumeration
std::vector<std::string_view> suite_names();
SuiteBounds suite_default_bounds(std::string_view name);  // throws UsageError
SuiteResult run_suite(std::string_view name, const SuiteBounds& overrides);

}  // namespace permcount
