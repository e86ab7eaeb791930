#include "permcount/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permcount/errors.hpp"

namespace permcount {

namespace {

constexpr Int kListGuard = 1000000;

void check_instance(std::span<const Int> caps, Int n1, Int n2, Int n3) {
  if (caps.empty()) throw std::domain_error("oracle: need at least one box");
  for (Int c : caps)
    if (c < 0) throw std::domain_error("oracle: caps must be >= 0");
  if (n1 < 0 || n2 < 0 || n3 < 0) throw std::domain_error("oracle: kind counts must be >= 0");
}

// Depth-first enumeration over boxes; visit() is called once per complete
// valid placement. Branches die early when the remaining boxes cannot
// absorb the remaining objects.
template <typename Visit>
void enumerate(std::span<const Int> caps, Int n1, Int n2, Int n3, Visit&& visit) {
  const std::size_t m = caps.size();
  std::vector<Int> suffix_capacity(m + 1, 0);
  for (std::size_t q = m; q-- > 0;) suffix_capacity[q] = suffix_capacity[q + 1] + caps[q];

  std::vector<std::array<Int, 3>> boxes(m, {0, 0, 0});
  auto rec = [&](auto&& self, std::size_t q, Int r1, Int r2, Int r3) -> void {
    if (r1 + r2 + r3 > suffix_capacity[q]) return;
    if (q == m) {
      visit(boxes);
      return;
    }
    const Int cap = caps[q];
    for (Int u = 0; u <= std::min(cap, r1); ++u)
      for (Int v = 0; v <= std::min(cap - u, r2); ++v)
        for (Int w = 0; w <= std::min(cap - u - v, r3); ++w) {
          boxes[q] = {u, v, w};
          self(self, q + 1, r1 - u, r2 - v, r3 - w);
        }
    boxes[q] = {0, 0, 0};
  };
  rec(rec, 0, n1, n2, n3);
}

std::vector<std::array<Int, 3>> rotated(const std::vector<std::array<Int, 3>>& boxes, std::size_t shift) {
  std::vector<std::array<Int, 3>> out(boxes.size());
  for (std::size_t q = 0; q < boxes.size(); ++q) out[q] = boxes[(q + shift) % boxes.size()];
  return out;
}

// Rotations admissible for equivalence: all of them when caps travel with
// positions, otherwise only the symmetries of the cap list.
std::vector<std::size_t> admissible_shifts(std::span<const Int> caps, bool caps_rotate) {
  std::vector<std::size_t> shifts;
  for (std::size_t g = 0; g < caps.size(); ++g) {
    if (caps_rotate) {
      bool symmetric = true;
      for (std::size_t q = 0; q < caps.size() && symmetric; ++q)
        symmetric = caps[(q + g) % caps.size()] == caps[q];
      if (!symmetric) continue;
    }
    shifts.push_back(g);
  }
  return shifts;
}

std::vector<std::array<Int, 3>> canonical_key(const std::vector<std::array<Int, 3>>& boxes,
                                              const std::vector<std::size_t>& shifts) {
  std::vector<std::array<Int, 3>> best = rotated(boxes, shifts.front());
  for (std::size_t i = 1; i < shifts.size(); ++i) {
    auto candidate = rotated(boxes, shifts[i]);
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace

BigCount oracle_linear(std::span<const Int> caps, Int n1, Int n2, Int n3) {
  check_instance(caps, n1, n2, n3);
  BigCount count = 0;
  enumerate(caps, n1, n2, n3, [&](const auto&) { ++count; });
  return count;
}

BigCount oracle_circular(std::span<const Int> caps, Int n1, Int n2, Int n3, bool caps_rotate) {
  check_instance(caps, n1, n2, n3);
  const auto shifts = admissible_shifts(caps, caps_rotate);
  std::set<std::vector<std::array<Int, 3>>> classes;
  enumerate(caps, n1, n2, n3,
            [&](const auto& boxes) { classes.insert(canonical_key(boxes, shifts)); });
  return static_cast<Int>(classes.size());
}

std::vector<PlacementState> oracle_list(std::span<const Int> caps, Int n1, Int n2, Int n3,
                                        Arrangement arrangement, bool caps_rotate) {
  check_instance(caps, n1, n2, n3);
  Int visited = 0;
  auto guard = [&]() {
    if (++visited > kListGuard)
      throw ResourceLimitError("oracle_list: more than 10^6 states; instance too large to list");
  };

  std::vector<PlacementState> out;
  if (arrangement == Arrangement::linear) {
    enumerate(caps, n1, n2, n3, [&](const auto& boxes) {
      guard();
      out.push_back(PlacementState{boxes});
    });
  } else {
    const auto shifts = admissible_shifts(caps, caps_rotate);
    // Representative of each class: the minimal valid member (for uniform
    // caps that is exactly the minimal rotation).
    std::map<std::vector<std::array<Int, 3>>, std::vector<std::array<Int, 3>>> reps;
    enumerate(caps, n1, n2, n3, [&](const auto& boxes) {
      guard();
      auto key = canonical_key(boxes, shifts);
      auto [it, inserted] = reps.try_emplace(std::move(key), boxes);
      if (!inserted && boxes < it->second) it->second = boxes;
    });
    for (auto& [key, rep] : reps) out.push_back(PlacementState{std::move(rep)});
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string format_placement(const PlacementState& state, int kinds) {
  if (kinds < 1 || kinds > 3) throw std::domain_error("format_placement: kinds must be 1..3");
  std::ostringstream os;
  for (std::size_t q = 0; q < state.boxes.size(); ++q) {
    if (q > 0) os << '|';
    for (int k = 0; k < kinds; ++k) {
      if (k > 0) os << ',';
      os << state.boxes[q][static_cast<std::size_t>(k)];
    }
  }
  return os.str();
}

std::vector<Int> uniform_caps(Int m, Int cap) {
  if (m < 1) throw std::domain_error("uniform_caps: m must be >= 1");
  if (cap < 0) throw std::domain_error("uniform_caps: cap must be >= 0");
  return std::vector<Int>(static_cast<std::size_t>(m), cap);
}

}  // namespace permcount
