#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "answerrank/oracle.hpp"

namespace answerrank {

Caps Caps::from_environment() {
  Caps caps;
  if (const char* env = std::getenv("ANSWERRANK_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || value < 3) {
      throw std::invalid_argument(std::string("ANSWERRANK_MAX_N must be an integer >= 3, got '") +
                                  env + "'");
    }
    caps.max_ring_nodes = value;
  }
  return caps;
}

Ring canonical_ring(std::span<const NodeId> sequence, const WeightedGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 3) throw InstanceError("wrong_node_count", "a ring needs at least 3 nodes");
  if (sequence.size() != n) {
    throw InstanceError("wrong_node_count", "ring has " + std::to_string(sequence.size()) +
                                                " nodes, graph has " + std::to_string(n));
  }
  std::vector<bool> seen(n + 1, false);
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId u = sequence[i];
    if (!graph.contains(u)) {
      throw InstanceError("node_out_of_range", "node " + std::to_string(u) + " is not in the graph");
    }
    if (seen[u]) throw InstanceError("repeated_node", "node " + std::to_string(u) + " repeats");
    seen[u] = true;
    if (u == 1) start = i;
  }

  Ring ring;
  ring.sequence.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ring.sequence.push_back(sequence[(start + i) % n]);
  if (ring.sequence[1] > ring.sequence[n - 1]) {
    std::reverse(ring.sequence.begin() + 1, ring.sequence.end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId a = ring.sequence[i];
    const NodeId b = ring.sequence[(i + 1) % n];
    const auto len = graph.edge_length(a, b);
    if (!len) {
      throw InstanceError("missing_edge", "edge (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ") is not in the graph");
    }
    ring.length += *len;
  }
  return ring;
}

BigInt route_count(const Ranking& rings, std::size_t n) {
  if (n < 3) throw std::invalid_argument("route_count needs n >= 3");
  return BigInt(2) * BigInt(n) * BigInt(rings.total_answers());
}

BigInt possible_answer_count(std::size_t n) {
  return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n));
}

AnswerSet<PathAnswer> enumerate_paths(const PathInstance& instance,
                                      const EnumerationOptions& options) {
  validate(instance);
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  if (n > options.caps.max_path_nodes) {
    throw CapExceeded("max_path_nodes", options.caps.max_path_nodes, n);
  }

  std::vector<PathAnswer> found;
  std::vector<NodeId> path{instance.source};
  std::vector<bool> visited(n + 1, false);
  visited[instance.source] = true;

  auto dfs = [&](auto&& self, NodeId u, Length length) -> void {
    if (u == instance.target) {
      found.push_back({path, length});
      return;
    }
    for (const Neighbor& nb : g.neighbors(u)) {
      if (visited[nb.node]) continue;
      visited[nb.node] = true;
      path.push_back(nb.node);
      self(self, nb.node, length + nb.length);
      path.pop_back();
      visited[nb.node] = false;
    }
  };
  dfs(dfs, instance.source, 0);
  return AnswerSet<PathAnswer>(Direction::minimize, std::move(found), possible_answer_count(n));
}

std::optional<Ring> held_karp(const TspInstance& instance, const Caps& caps) {
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  if (n > caps.max_held_karp_nodes) {
    throw CapExceeded("max_held_karp_nodes", caps.max_held_karp_nodes, n);
  }
  if (n < 3) return std::nullopt;

  // Node k + 2 is tracked as bit k; node 1 is the fixed start.
  const std::size_t m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  constexpr Length kInf = std::numeric_limits<Length>::max();
  std::vector<Length> weight(n * n, -1);
  for (const Edge& e : g.edges()) {
    weight[(e.u - 1) * n + (e.v - 1)] = e.length;
    weight[(e.v - 1) * n + (e.u - 1)] = e.length;
  }
  auto w = [&](std::size_t a, std::size_t b) { return weight[a * n + b]; };

  std::vector<Length> best((full + 1) * m, kInf);
  std::vector<std::uint8_t> parent((full + 1) * m, 0xff);
  for (std::size_t j = 0; j < m; ++j) {
    if (const Length l = w(0, j + 1); l >= 0) best[(std::size_t{1} << j) * m + j] = l;
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      const Length cur = best[mask * m + j];
      if (cur == kInf) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        const Length l = w(j + 1, k + 1);
        if (l < 0) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        if (cur + l < best[next * m + k]) {
          best[next * m + k] = cur + l;
          parent[next * m + k] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  Length optimum = kInf;
  std::size_t last = m;
  for (std::size_t j = 0; j < m; ++j) {
    const Length l = w(j + 1, 0);
    if (l < 0 || best[full * m + j] == kInf) continue;
    if (best[full * m + j] + l < optimum) {
      optimum = best[full * m + j] + l;
      last = j;
    }
  }
  if (last == m) return std::nullopt;

  std::vector<NodeId> reversed;
  std::size_t mask = full;
  std::size_t j = last;
  while (j != 0xff) {
    reversed.push_back(static_cast<NodeId>(j + 2));
    const std::size_t prev = parent[mask * m + j];
    mask &= ~(std::size_t{1} << j);
    j = prev;
  }
  reversed.push_back(1);
  std::reverse(reversed.begin(), reversed.end());
  return canonical_ring(reversed, g);
}

}  // namespace answerrank
