#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "answerrank/types.hpp"

namespace answerrank {

// Hamiltonian cycle in canonical form: starts at node 1 and the second node
// is smaller than the last one. `length` is the exact sum of its n edges.
struct Ring {
  std::vector<NodeId> sequence;
  Length length = 0;

  Objective objective() const { return length; }
  bool operator==(const Ring&) const = default;
  auto operator<=>(const Ring&) const = default;
};

// Simple source-to-target path.
struct PathAnswer {
  std::vector<NodeId> sequence;
  Length length = 0;

  Objective objective() const { return length; }
  bool operator==(const PathAnswer&) const = default;
  auto operator<=>(const PathAnswer&) const = default;
};

// Subset of item indices (0-based, ascending). For knapsack `value` is the
// total value; for partition it is |sum(chosen) - sum(rest)|.
struct SubsetAnswer {
  std::vector<std::size_t> chosen;
  Objective value = 0;
  std::int64_t weight = 0;
  bool feasible = true;

  Objective objective() const { return value; }
  bool operator==(const SubsetAnswer&) const = default;
  auto operator<=>(const SubsetAnswer&) const = default;
};

// Truth values indexed by variable - 1. Every satisfying assignment has the
// same objective, so all of them share the best rank.
struct Assignment {
  std::vector<bool> values;

  Objective objective() const { return 1; }
  bool operator==(const Assignment&) const = default;
  auto operator<=>(const Assignment&) const = default;
};

// Dash-joined display forms used in CSV and claim files.
std::string format_sequence(const std::vector<NodeId>& nodes);
std::string format_answer(const Ring& ring);
std::string format_answer(const PathAnswer& path);
std::string format_answer(const SubsetAnswer& subset);  // 1-based indices
std::string format_answer(const Assignment& assignment);  // e.g. "TFT"

}  // namespace answerrank
