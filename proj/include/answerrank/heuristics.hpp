#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "answerrank/answers.hpp"
#include "answerrank/instances.hpp"

namespace answerrank {

using HeuristicAnswer = std::variant<Ring, PathAnswer, SubsetAnswer>;

struct HeuristicOutcome {
  HeuristicAnswer answer;
  std::string producer;
  std::chrono::nanoseconds elapsed{0};

  Objective objective() const;
};

// A heuristic that ran but produced no allowable answer. `partial` holds the
// node walk (nn), or the accepted edges as consecutive node pairs
// (greedy-edge), at the point of failure.
struct HeuristicFailure {
  std::string producer;
  std::string reason;
  std::vector<NodeId> partial;
};

using HeuristicResult = std::variant<HeuristicOutcome, HeuristicFailure>;

inline bool succeeded(const HeuristicResult& r) {
  return std::holds_alternative<HeuristicOutcome>(r);
}

// Stable command-line identifiers.
namespace heuristic_names {
inline constexpr std::string_view nearest_neighbor = "nn";
inline constexpr std::string_view greedy_edge = "greedy-edge";
inline constexpr std::string_view two_opt = "two-opt";
inline constexpr std::string_view random = "random";
inline constexpr std::string_view dijkstra = "dijkstra";
inline constexpr std::string_view greedy_knapsack = "greedy-knapsack";
inline constexpr std::string_view greedy_partition = "greedy-partition";
}  // namespace heuristic_names

// Greedy walk to the nearest unvisited neighbor (lowest id on ties), closed
// back to `start`.
HeuristicResult nearest_neighbor(const TspInstance& instance, NodeId start);

// Edges in ascending (length, u, v) order, skipping any that would give a
// node degree 3 or close a cycle shorter than n.
HeuristicResult greedy_edge(const TspInstance& instance);

// Best-improvement 2-opt restricted to exchanges whose new edges exist.
HeuristicOutcome two_opt(const TspInstance& instance, const Ring& start_ring);

// Uniform draw among allowable rings by rejection sampling of random
// permutations. Fails after `max_attempts` rejected permutations.
HeuristicResult random_allowable_ring(const TspInstance& instance,
                                      std::uint64_t seed,
                                      std::uint64_t max_attempts = 1'000'000);

// Shortest simple source-target path. Fails when the target is unreachable.
HeuristicResult dijkstra(const PathInstance& instance);

// Items by descending value/weight (lower index first on ties) while they fit.
HeuristicOutcome greedy_knapsack(const KnapsackInstance& instance);

// Numbers in descending order, each to the lighter side (side A on ties).
// The reported subset is normalized to contain item 0.
HeuristicOutcome greedy_partition(const PartitionInstance& instance);

}  // namespace answerrank
