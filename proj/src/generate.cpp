#include "answerrank/generate.hpp"

#include <cmath>
#include <set>

#include "answerrank/random.hpp"

namespace answerrank {

namespace {

void check_range(WeightRange w) {
  if (w.min > w.max) throw InstanceError("weight_range", "weight range is empty");
  if (w.min < 0) throw InstanceError("weight_range", "weights must be >= 0");
}

}  // namespace

WeightedGraph generate_graph(std::size_t n, double density, WeightRange weights,
                             std::uint64_t seed) {
  if (n < 3) throw InstanceError("node_count", "graph generation needs n >= 3");
  if (!(density > 0.0 && density <= 1.0)) {
    throw InstanceError("density", "density must lie in (0, 1]");
  }
  check_range(weights);
  Rng rng(seed);

  std::vector<std::vector<bool>> adjacent(n + 1, std::vector<bool>(n + 1, false));
  std::vector<std::size_t> degree(n + 1, 0);
  std::vector<Edge> edges;
  auto add = [&](NodeId u, NodeId v) {
    adjacent[u][v] = adjacent[v][u] = true;
    ++degree[u];
    ++degree[v];
    edges.push_back({u, v, rng.between(weights.min, weights.max)});
  };

  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) {
      if (density >= 1.0 || rng.unit() < density) add(u, v);
    }
  }

  for (NodeId u = 1; u <= n; ++u) {
    while (degree[u] < 2) {
      std::vector<NodeId> needy;
      std::vector<NodeId> any;
      for (NodeId v = 1; v <= n; ++v) {
        if (v == u || adjacent[u][v]) continue;
        any.push_back(v);
        if (degree[v] < 2) needy.push_back(v);
      }
      const auto& pool = needy.empty() ? any : needy;
      add(u, pool[rng.below(pool.size())]);
    }
  }
  return WeightedGraph(n, std::move(edges));
}

TspInstance generate_tsp(std::size_t n, double density, WeightRange weights,
                         std::uint64_t seed) {
  return TspInstance{generate_graph(n, density, weights, seed)};
}

PathInstance generate_path(std::size_t n, double density, WeightRange weights,
                           std::uint64_t seed) {
  return PathInstance{generate_graph(n, density, weights, seed), 1,
                      static_cast<NodeId>(n)};
}

KnapsackInstance generate_knapsack(std::size_t items, WeightRange weights,
                                   std::uint64_t seed) {
  if (items == 0) throw InstanceError("empty_items", "knapsack needs at least one item");
  check_range(weights);
  if (weights.min < 1) throw InstanceError("weight_range", "item weights must be >= 1");
  Rng rng(seed);
  KnapsackInstance k;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < items; ++i) {
    const auto w = rng.between(weights.min, weights.max);
    const auto v = rng.between(weights.min, weights.max);
    k.items.push_back({w, v});
    total += w;
  }
  k.capacity = std::max<std::int64_t>(1, total / 2);
  return k;
}

PartitionInstance generate_partition(std::size_t count, WeightRange weights,
                                     std::uint64_t seed) {
  if (count == 0) throw InstanceError("empty_numbers", "partition needs at least one number");
  check_range(weights);
  if (weights.min < 1) throw InstanceError("weight_range", "numbers must be >= 1");
  Rng rng(seed);
  PartitionInstance p;
  for (std::size_t i = 0; i < count; ++i) p.numbers.push_back(rng.between(weights.min, weights.max));
  return p;
}

CnfFormula generate_cnf(std::size_t variables, std::size_t clause_count,
                        std::size_t clause_width, std::uint64_t seed) {
  if (variables == 0) throw InstanceError("variable_count", "formula needs variables");
  if (clause_width == 0 || clause_width > variables) {
    throw InstanceError("clause_width", "clause width must lie in 1..variables");
  }
  if (clause_count == 0) {
    clause_count = static_cast<std::size_t>(std::ceil(4.26 * static_cast<double>(variables)));
  }
  Rng rng(seed);
  CnfFormula f;
  f.variable_count = variables;
  for (std::size_t c = 0; c < clause_count; ++c) {
    std::set<Literal> vars;
    while (vars.size() < clause_width) {
      vars.insert(static_cast<Literal>(rng.below(variables) + 1));
    }
    std::vector<Literal> clause;
    for (Literal v : vars) clause.push_back(rng.below(2) ? v : -v);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace answerrank
