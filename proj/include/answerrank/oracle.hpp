#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "answerrank/answer_set.hpp"
#include "answerrank/answers.hpp"
#include "answerrank/instances.hpp"

namespace answerrank {

// Enumeration limits. Exceeding one raises CapExceeded instead of truncating.
struct Caps {
  std::size_t max_ring_nodes = 13;
  std::size_t max_held_karp_nodes = 18;
  std::size_t max_sat_variables = 24;
  std::size_t max_path_nodes = 12;
  std::size_t max_subset_items = 22;

  // Defaults, with ANSWERRANK_MAX_N overriding max_ring_nodes when set.
  static Caps from_environment();
};

// Hard upper bound on ring enumeration; node sets are tracked in 32-bit masks
// and anything larger is not enumerable in practice.
inline constexpr std::size_t kRingNodeLimit = 20;

struct EnumerationOptions {
  Caps caps;
  // Worker count for the parallel kernels; 0 uses the OpenMP default.
  int threads = 0;
};

// Canonical representative of the rotation/reflection class of `sequence`
// with its exact length. Throws InstanceError ("wrong_node_count",
// "repeated_node", "node_out_of_range", "missing_edge").
Ring canonical_ring(std::span<const NodeId> sequence, const WeightedGraph& graph);

// Every Hamiltonian ring exactly once. An empty set is a valid outcome.
AnswerSet<Ring> enumerate_rings(const TspInstance& instance,
                                const EnumerationOptions& options = {});

// 2n readings (n starting nodes, two directions) per ring.
BigInt route_count(const Ranking& rings, std::size_t n);

// n^n: sequences of n nodes with repetition allowed.
BigInt possible_answer_count(std::size_t n);

AnswerSet<PathAnswer> enumerate_paths(const PathInstance& instance,
                                      const EnumerationOptions& options = {});

// Feasible subsets, maximizing total value. The empty subset is included.
AnswerSet<SubsetAnswer> enumerate_knapsack(const KnapsackInstance& instance,
                                           const EnumerationOptions& options = {});

// Two-colorings with the first number fixed to side A, minimizing the
// absolute difference of the side sums.
AnswerSet<SubsetAnswer> enumerate_partition(const PartitionInstance& instance,
                                            const EnumerationOptions& options = {});

// Satisfying assignments only; at most one group.
AnswerSet<Assignment> enumerate_assignments(const CnfFormula& formula,
                                            const EnumerationOptions& options = {});

// Subset dynamic program over rings through node 1. Returns nullopt when the
// graph has no Hamiltonian cycle.
std::optional<Ring> held_karp(const TspInstance& instance, const Caps& caps = {});

// Single-threaded reference kernels with the same contracts as the parallel
// versions above. They follow a different enumeration order on purpose
// (plain permutation / mask sweeps) and exist for testing and benchmarks.
namespace serial {
AnswerSet<Ring> enumerate_rings(const TspInstance& instance, const Caps& caps = {});
AnswerSet<Assignment> enumerate_assignments(const CnfFormula& formula,
                                            const Caps& caps = {});
AnswerSet<SubsetAnswer> enumerate_knapsack(const KnapsackInstance& instance,
                                           const Caps& caps = {});
AnswerSet<SubsetAnswer> enumerate_partition(const PartitionInstance& instance,
                                            const Caps& caps = {});
}  // namespace serial

}  // namespace answerrank
