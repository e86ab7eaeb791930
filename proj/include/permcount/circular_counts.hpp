#pragma once

#include <initializer_list>
#include <span>

#include "permcount/big_count.hpp"
#include "permcount/linear_counts.hpp"

namespace permcount {

// Rotation classes of a multiset arrangement on a circle of N = sum(parts)
// positions split into blocks of the given sizes:
//   (1/N) * sum over d | gcd(parts) of phi(d) * multinomial(parts / d).
// All parts must be >= 1; the division is exact and asserted.
BigCount necklace_multinomial(std::span<const Int> parts);
BigCount necklace_multinomial(std::initializer_list<Int> parts);

// Bounded circular count: sum of necklace_multinomial over the capped
// diagram tail, applied to each row's multiplicity tuple (the zero-box
// block participates when positive, a block of empty positions being a
// symbol class like any other).
BigCount count_circular(Int m, Int n, Int cap);

// Circular arrangements with at least one box above the cap:
// count_circular(m, n, n) - count_circular(m, n, cap).
BigCount circular_excess(Int m, Int n, Int cap);

// Independent single-kind reference: Burnside average over the rotation
// group, with fixed-point counts delegated to the linear
// inclusion-exclusion counter on the period.
BigCount count_circular_burnside(Int m, Int n, Int cap);

// The published two-kind circular formula evaluated literally: sum of
// splits_count(row, n2) * necklace_multinomial(row blocks) over the capped
// diagram tail. Known to disagree with rotation-orbit enumeration on small
// cases (see the comparison report); never used as a reference.
BigCount count_two_kinds_circular_paper(Int m, Int n1, Int n2, Int cap);

// Two-kind circular reference: Burnside average over the rotation group;
// fixed arrangements of each period are counted by exact dynamic
// programming over per-box (kind1, kind2) loads bounded by the cap.
BigCount count_two_kinds_circular_burnside(Int m, Int n1, Int n2, Int cap);

// The published restricted-range two-kind circular formula (single cap),
// evaluated literally: product of the per-kind unrestricted circular
// totals minus a double sum of smaller-circle totals. Accepts
// cap <= n1+n2 <= 2*cap+1 (at cap = n the subtracted term is empty),
// n2 <= n1, m >= 2. Exploratory; may disagree with enumeration and can
// even go negative within its range.
BigCount count_two_kinds_circular_restricted_paper(Int m, Int n1, Int n2, Int cap);

// The published per-group variant (r >= 2 groups, distinguishable
// positions, hence the group-size factor). Same literal-evaluation caveats.
BigCount count_two_kinds_circular_groups_paper(const BoxGroupSpec& spec, Int n1, Int n2);

// Validity-range predicates for the literal formulas above, used by the
// comparison harness to decide which columns a grid point gets.
bool eq25_in_range(Int m, Int n1, Int n2, Int cap);
bool eq26_in_range(const BoxGroupSpec& spec, Int n1, Int n2);

}  // namespace permcount
