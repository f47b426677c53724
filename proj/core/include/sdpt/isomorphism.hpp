#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdpt/semigroup.hpp"

namespace sdpt {

inline constexpr std::uint64_t kDefaultIsoBudget = 1'000'000;

struct IsoResult {
  enum class Status { isomorphic, none, unknown };
  Status status = Status::unknown;
  // For Status::isomorphic: map[i] is the image in b of element i of a.
  std::optional<std::vector<int>> map;
  // Search nodes spent (candidate assignments tried).
  std::uint64_t nodes = 0;
};

// Backtracking isomorphism test. Element profiles prune candidates; each
// tentative assignment propagates through known products. Search stops at
// the node budget with Status::unknown, so the answer is never wrong but
// may be inconclusive on adversarial inputs.
IsoResult are_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b,
                         std::uint64_t node_budget = kDefaultIsoBudget);

}  // namespace sdpt
