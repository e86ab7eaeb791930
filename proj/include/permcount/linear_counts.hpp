#pragma once

#include <vector>

#include "permcount/big_count.hpp"

namespace permcount {

// A contiguous group of boxes sharing one occupancy cap.
struct BoxGroup {
  Int boxes = 0;
  Int cap = 0;
};

// r >= 1 groups partitioning the m boxes; group order fixes the box layout
// (contiguous arcs) wherever positions matter.
struct BoxGroupSpec {
  std::vector<BoxGroup> groups;

  Int total_boxes() const;
  Int min_cap() const;                  // l_a, the binding cap for range checks
  std::vector<Int> per_box_caps() const;
  void validate() const;                // throws std::domain_error
};

// Unrestricted linear count C(m+n-1, n).
BigCount count_unrestricted(Int m, Int n);

// Bounded linear count by inclusion-exclusion over the offending boxes;
// alternating sum with upper limit floor(n/(cap+1)), evaluated literally
// under the zero-binomial convention (cap = 0 included).
BigCount count_linear_incexc(Int m, Int n, Int cap);

// Coefficient of x^n in (1 + x + ... + x^cap)^m, by exact truncated
// polynomial powers. Third, independent route to the same count.
BigCount gf_coefficient(Int m, Int n, Int cap);

// Two-kind bounded count, closed form valid only for
// cap < n1+n2 <= 2*cap+1, n2 < n1, n2 <= cap, m >= 2.
BigCount count_two_kinds_restricted(Int m, Int n1, Int n2, Int cap);

// Two-kind variant with per-group caps; validity range as above with the
// smallest cap in place of cap. Groups whose n - cap_i - 1 is negative
// contribute nothing to the subtracted term.
BigCount count_two_kinds_groups(const BoxGroupSpec& spec, Int n1, Int n2);

// Single-kind variant with per-group caps, valid for l_a < n <= 2*l_a+1.
BigCount count_single_kind_groups(const BoxGroupSpec& spec, Int n);

// Three-kind bounded count, closed form valid for n1 >= n2 >= n3,
// cap < n <= 2*cap+1, n1 >= n - cap - 1, m >= 2.
BigCount count_three_kinds_restricted(Int m, Int n1, Int n2, Int n3, Int cap);

namespace detail {

// The inclusion-exclusion sum with an explicit upper limit. Under the
// zero-binomial convention any limit >= floor(n/(cap+1)) gives the same
// value; exposed for the riordan-limit verification suite.
BigCount count_linear_incexc_upper(Int m, Int n, Int cap, Int upper);

}  // namespace detail

}  // namespace permcount
