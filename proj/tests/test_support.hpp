#pragma once

// Independent brute-force oracles used to cross-check the library. Nothing
// here calls the enumeration kernels it is compared against.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "answerrank/instances.hpp"

namespace answerrank::testing {

inline WeightedGraph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return WeightedGraph(n, std::vector<Edge>(edges));
}

inline WeightedGraph complete_graph(std::size_t n, Length length = 1) {
  std::vector<Edge> edges;
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) edges.push_back({u, v, length});
  }
  return WeightedGraph(n, std::move(edges));
}

// Two triangles {1,2,3} and {4,5,6} joined by the single edge (3, 4).
inline WeightedGraph bridged_triangles() {
  return make_graph(6, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {4, 5, 1}, {5, 6, 1}, {4, 6, 1},
                        {3, 4, 1}});
}

// Rotation/reflection normal form computed without the library.
inline std::vector<NodeId> normalize_cycle(std::vector<NodeId> seq) {
  auto one = std::find(seq.begin(), seq.end(), NodeId{1});
  std::rotate(seq.begin(), one, seq.end());
  if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

struct BruteRing {
  std::vector<NodeId> sequence;
  Length length;
  bool operator<(const BruteRing& o) const { return sequence < o.sequence; }
};

// Every permutation of 1..n, kept when all n cycle edges exist; duplicates
// removed through the normal form. O(n!), fine for n <= 9.
inline std::vector<BruteRing> brute_rings(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::set<std::vector<NodeId>> seen;
  std::vector<BruteRing> rings;
  if (n < 3) return rings;
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{1});
  do {
    Length total = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto l = g.edge_length(perm[i], perm[(i + 1) % n]);
      ok = l.has_value();
      if (ok) total += *l;
    }
    if (!ok) continue;
    auto norm = normalize_cycle(perm);
    if (seen.insert(norm).second) rings.push_back({norm, total});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(rings.begin(), rings.end());
  return rings;
}

// Dense rank of `value` among `values` (ascending = better when minimizing).
inline std::size_t dense_rank(const std::vector<std::int64_t>& values, std::int64_t value,
                              bool minimize = true) {
  std::set<std::int64_t> distinct(values.begin(), values.end());
  std::size_t rank = 1;
  for (auto v : distinct) {
    if (minimize ? v < value : v > value) ++rank;
  }
  return rank;
}

// Textbook 0/1 knapsack table over capacities.
inline std::int64_t knapsack_dp(const KnapsackInstance& k) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(k.capacity) + 1, 0);
  for (const auto& item : k.items) {
    for (std::int64_t c = k.capacity; c >= item.weight; --c) {
      best[c] = std::max(best[c], best[c - item.weight] + item.value);
    }
  }
  return best[k.capacity];
}

// Subset-sum reachability: the smallest |A - B| over all splits.
inline std::int64_t partition_dp(const PartitionInstance& p) {
  const std::int64_t total = std::accumulate(p.numbers.begin(), p.numbers.end(), std::int64_t{0});
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  for (auto x : p.numbers) {
    for (std::int64_t s = total; s >= x; --s) {
      if (reach[s - x]) reach[s] = true;
    }
  }
  std::int64_t best = total;
  for (std::int64_t s = 0; s <= total; ++s) {
    if (reach[s]) best = std::min(best, std::abs(total - 2 * s));
  }
  return best;
}

// Truth-table sweep returning every satisfying assignment in ascending order.
inline std::vector<std::vector<bool>> truth_table_models(const CnfFormula& f) {
  std::vector<std::vector<bool>> models;
  const std::size_t k = f.variable_count;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<bool> values(k);
    for (std::size_t v = 0; v < k; ++v) values[v] = (mask >> (k - 1 - v)) & 1;
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (Literal lit : clause) {
        any = any || values[static_cast<std::size_t>(std::abs(lit)) - 1] == (lit > 0);
      }
      all = all && any;
    }
    if (all) models.push_back(values);
  }
  return models;
}

// Bellman-Ford over the undirected graph.
inline std::optional<Length> shortest_distance(const PathInstance& p) {
  const auto& g = p.graph;
  constexpr Length kInf = std::numeric_limits<Length>::max();
  std::vector<Length> dist(g.node_count() + 1, kInf);
  dist[p.source] = 0;
  for (std::size_t round = 0; round < g.node_count(); ++round) {
    for (const Edge& e : g.edges()) {
      if (dist[e.u] != kInf) dist[e.v] = std::min(dist[e.v], dist[e.u] + e.length);
      if (dist[e.v] != kInf) dist[e.u] = std::min(dist[e.u], dist[e.v] + e.length);
    }
  }
  if (dist[p.target] == kInf) return std::nullopt;
  return dist[p.target];
}

}  // namespace answerrank::testing
