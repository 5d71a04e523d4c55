#pragma once

#include <cstddef>
#include <cstdint>

#include "answerrank/instances.hpp"

namespace answerrank {

struct WeightRange {
  std::int64_t min = 1;
  std::int64_t max = 1;
};

// Random graph on n >= 3 nodes. Each of the C(n,2) pairs is kept with
// probability `density`; afterwards every node with degree < 2 receives
// random extra edges (partners that are themselves short of degree 2 are
// preferred). Deterministic for fixed arguments.
WeightedGraph generate_graph(std::size_t n, double density, WeightRange weights,
                             std::uint64_t seed);

TspInstance generate_tsp(std::size_t n, double density, WeightRange weights,
                         std::uint64_t seed);

// Source 1, target n.
PathInstance generate_path(std::size_t n, double density, WeightRange weights,
                           std::uint64_t seed);

// Weights and values drawn from `weights`; capacity is half the weight total.
KnapsackInstance generate_knapsack(std::size_t items, WeightRange weights,
                                   std::uint64_t seed);

PartitionInstance generate_partition(std::size_t count, WeightRange weights,
                                     std::uint64_t seed);

// Random k-CNF with distinct variables per clause and fair signs.
// clause_count == 0 picks ceil(4.26 * variables).
CnfFormula generate_cnf(std::size_t variables, std::size_t clause_count,
                        std::size_t clause_width, std::uint64_t seed);

}  // namespace answerrank
