#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "permcount/big_count.hpp"

namespace permcount {

enum class Arrangement { linear, circular };

// One full placement: per-box counts of the first/second/third kind.
// Unused kinds stay 0.
struct PlacementState {
  std::vector<std::array<Int, 3>> boxes;

  bool operator==(const PlacementState&) const = default;
  auto operator<=>(const PlacementState&) const = default;
};

// Exhaustive reference count of placements of (n1, n2, n3) objects into
// caps.size() boxes with per-box totals bounded by the caps. Recursion is
// pruned on remaining capacity; exact and deterministic.
BigCount oracle_linear(std::span<const Int> caps, Int n1, Int n2, Int n3);

// Reference count of rotation classes. Valid placements are deduplicated
// by the lexicographically minimal rotation of the per-box tuple sequence.
// Caps stay fixed to positions by default, so with non-uniform caps a
// class is the set of valid placements related by some rotation. With
// caps_rotate set, only rotations mapping the cap list onto itself relate
// placements (the whole circle, caps included, is turned); for uniform
// caps the flag is irrelevant.
BigCount oracle_circular(std::span<const Int> caps, Int n1, Int n2, Int n3,
                         bool caps_rotate = false);

// Deterministic listing of all states, sorted descending-lexicographically
// on the flattened per-box tuples (circular: one representative per class,
// the minimal valid member). Guarded: throws ResourceLimitError once more
// than 10^6 states are visited.
std::vector<PlacementState> oracle_list(std::span<const Int> caps, Int n1, Int n2, Int n3,
                                        Arrangement arrangement, bool caps_rotate = false);

// "u,v,w|u,v,w|..." with exactly `kinds` components per box (1..3),
// matching the golden-file listing format.
std::string format_placement(const PlacementState& state, int kinds);

std::vector<Int> uniform_caps(Int m, Int cap);

}  // namespace permcount
