#include "permcount/linear_counts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permcount/core_math.hpp"
#include "permcount/errors.hpp"
#include "bounded_poly.hpp"

namespace permcount {

namespace {

void check_mnl(Int m, Int n, Int cap, const char* where) {
  std::ostringstream os;
  if (m < 1) {
    os << where << ": m must be >= 1 (got " << m << ")";
    throw std::domain_error(os.str());
  }
  if (n < 0) {
    os << where << ": n must be >= 0 (got " << n << ")";
    throw std::domain_error(os.str());
  }
  if (cap < 0) {
    os << where << ": cap must be >= 0 (got " << cap << ")";
    throw std::domain_error(os.str());
  }
}

BigCount checked_nonnegative(BigCount value, const char* where) {
  if (value < 0) throw std::logic_error(std::string(where) + ": negative count");
  return value;
}

[[noreturn]] void range_fail(const std::string& what) { throw FormulaRangeError(what); }

}  // namespace

Int BoxGroupSpec::total_boxes() const {
  Int m = 0;
  for (const auto& g : groups) m += g.boxes;
  return m;
}

Int BoxGroupSpec::min_cap() const {
  Int la = groups.front().cap;
  for (const auto& g : groups) la = std::min(la, g.cap);
  return la;
}

std::vector<Int> BoxGroupSpec::per_box_caps() const {
  std::vector<Int> caps;
  for (const auto& g : groups)
    caps.insert(caps.end(), static_cast<std::size_t>(g.boxes), g.cap);
  return caps;
}

void BoxGroupSpec::validate() const {
  if (groups.empty()) throw std::domain_error("box groups: at least one group required");
  for (const auto& g : groups) {
    if (g.boxes < 1) throw std::domain_error("box groups: every group needs >= 1 box");
    if (g.cap < 0) throw std::domain_error("box groups: caps must be >= 0");
  }
}

BigCount count_unrestricted(Int m, Int n) {
  if (m < 1) throw std::domain_error("count_unrestricted: m must be >= 1");
  if (n < 0) throw std::domain_error("count_unrestricted: n must be >= 0");
  return binomial(m + n - 1, n);
}

BigCount detail::count_linear_incexc_upper(Int m, Int n, Int cap, Int upper) {
  BigCount acc = 0;
  for (Int i = 0; i <= upper; ++i) {
    BigCount term = binomial(m, i) * binomial(m + n - i * cap - i - 1, n - i * cap - i);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

BigCount count_linear_incexc(Int m, Int n, Int cap) {
  check_mnl(m, n, cap, "count_linear_incexc");
  BigCount acc = detail::count_linear_incexc_upper(m, n, cap, n / (cap + 1));
  return checked_nonnegative(std::move(acc), "count_linear_incexc");
}

BigCount gf_coefficient(Int m, Int n, Int cap) {
  check_mnl(m, n, cap, "gf_coefficient");
  std::vector<BigCount> coef(static_cast<std::size_t>(n) + 1);
  coef[0] = 1;
  for (Int step = 0; step < m; ++step) detail::multiply_bounded_ones(coef, cap);
  return coef[static_cast<std::size_t>(n)];
}

BigCount count_two_kinds_restricted(Int m, Int n1, Int n2, Int cap) {
  if (n1 < 0 || n2 < 0) throw std::domain_error("count_two_kinds_restricted: kind counts must be >= 0");
  if (cap < 0) throw std::domain_error("count_two_kinds_restricted: cap must be >= 0");
  const Int n = n1 + n2;
  if (m < 2) range_fail("eq15 requires m >= 2");
  if (!(cap < n && n <= 2 * cap + 1))
    range_fail("eq15 requires cap < n1+n2 <= 2*cap+1");
  if (!(n2 < n1)) range_fail("eq15 requires n2 < n1");
  if (!(n1 <= 2 * cap + 1)) range_fail("eq15 requires n1 <= 2*cap+1");
  if (!(n2 <= cap)) range_fail("eq15 requires n2 <= cap");

  BigCount lead = binomial(m + n1 - 1, n1) * binomial(m + n2 - 1, n2);
  BigCount excess = 0;
  for (Int j = 0; j <= n - cap - 1; ++j) {
    const Int alpha = std::min(n2, n - cap - 1 - j);
    excess += binomial(m - 2 + j, j) * binomial(m - 1 + alpha, alpha);
  }
  return checked_nonnegative(lead - m * excess, "count_two_kinds_restricted");
}

BigCount count_two_kinds_groups(const BoxGroupSpec& spec, Int n1, Int n2) {
  spec.validate();
  if (n1 < 0 || n2 < 0) throw std::domain_error("count_two_kinds_groups: kind counts must be >= 0");
  const Int m = spec.total_boxes();
  const Int la = spec.min_cap();
  const Int n = n1 + n2;
  if (m < 2) range_fail("eq16 requires m >= 2 total boxes");
  if (!(la < n && n <= 2 * la + 1))
    range_fail("eq16 requires l_a < n1+n2 <= 2*l_a+1 (l_a = smallest group cap)");
  if (!(n2 < n1)) range_fail("eq16 requires n2 < n1");
  if (!(n1 <= 2 * la + 1)) range_fail("eq16 requires n1 <= 2*l_a+1");
  if (!(n2 <= la)) range_fail("eq16 requires n2 <= l_a");

  BigCount lead = binomial(m + n1 - 1, n1) * binomial(m + n2 - 1, n2);
  BigCount excess = 0;
  for (const auto& g : spec.groups) {
    if (n - g.cap - 1 < 0) continue;  // no box of this group can overflow
    BigCount group_sum = 0;
    for (Int j = 0; j <= n - g.cap - 1; ++j) {
      const Int alpha = std::min(n2, n - g.cap - 1 - j);
      group_sum += binomial(m - 2 + j, j) * binomial(m - 1 + alpha, alpha);
    }
    excess += g.boxes * group_sum;
  }
  return checked_nonnegative(lead - excess, "count_two_kinds_groups");
}

BigCount count_single_kind_groups(const BoxGroupSpec& spec, Int n) {
  spec.validate();
  if (n < 0) throw std::domain_error("count_single_kind_groups: n must be >= 0");
  const Int m = spec.total_boxes();
  const Int la = spec.min_cap();
  if (m < 2) range_fail("eq17 requires m >= 2 total boxes");
  if (!(la < n && n <= 2 * la + 1))
    range_fail("eq17 requires l_a < n <= 2*l_a+1 (l_a = smallest group cap)");

  BigCount acc = binomial(m + n - 1, n);
  for (const auto& g : spec.groups) {
    const Int e = n - g.cap - 1;
    if (e < 0) continue;
    // collapsed sum of C(m-2+j, j) for j = 0..e
    acc -= g.boxes * binomial(m - 1 + e, e);
  }
  return checked_nonnegative(std::move(acc), "count_single_kind_groups");
}

BigCount count_three_kinds_restricted(Int m, Int n1, Int n2, Int n3, Int cap) {
  if (n1 < 0 || n2 < 0 || n3 < 0)
    throw std::domain_error("count_three_kinds_restricted: kind counts must be >= 0");
  if (cap < 0) throw std::domain_error("count_three_kinds_restricted: cap must be >= 0");
  const Int n = n1 + n2 + n3;
  if (m < 2) range_fail("eq18 requires m >= 2");
  if (!(n1 >= n2 && n2 >= n3)) range_fail("eq18 requires n1 >= n2 >= n3");
  if (!(cap < n && n <= 2 * cap + 1))
    range_fail("eq18 requires cap < n1+n2+n3 <= 2*cap+1");
  // Without this the subtracted sum counts impossible splits (more than n1
  // objects of the first kind outside the overfull box) and the result can
  // go negative.
  if (!(n1 >= n - cap - 1)) range_fail("eq18 requires n1 >= n-cap-1");

  BigCount lead = binomial(m + n1 - 1, n1) * binomial(m + n2 - 1, n2) * binomial(m + n3 - 1, n3);
  BigCount excess = 0;
  for (Int i = 0; i <= n - cap - 1; ++i) {
    const Int alpha = std::min(n2, n - cap - 1 - i);
    for (Int j = 0; j <= alpha; ++j) {
      const Int beta = std::min(n3, n - cap - 1 - i - j);
      excess += binomial(m - 2 + i, i) * binomial(m - 2 + j, j) * binomial(m - 1 + beta, beta);
    }
  }
  return checked_nonnegative(lead - m * excess, "count_three_kinds_restricted");
}

}  // namespace permcount
