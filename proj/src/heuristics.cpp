#include "answerrank/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "answerrank/oracle.hpp"
#include "answerrank/random.hpp"

namespace answerrank {

namespace {

using Clock = std::chrono::steady_clock;

HeuristicOutcome finish(HeuristicAnswer answer, std::string_view producer,
                        Clock::time_point started) {
  return {std::move(answer), std::string(producer),
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started)};
}

HeuristicFailure fail(std::string_view producer, std::string reason,
                      std::vector<NodeId> partial = {}) {
  return {std::string(producer), std::move(reason), std::move(partial)};
}

}  // namespace

Objective HeuristicOutcome::objective() const {
  return std::visit([](const auto& a) { return a.objective(); }, answer);
}

HeuristicResult nearest_neighbor(const TspInstance& instance, NodeId start) {
  const auto started = Clock::now();
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  if (!g.contains(start)) {
    return fail(heuristic_names::nearest_neighbor, "start node out of range");
  }
  if (n < 3) return fail(heuristic_names::nearest_neighbor, "graph has fewer than 3 nodes");

  std::vector<bool> visited(n + 1, false);
  std::vector<NodeId> walk{start};
  visited[start] = true;
  while (walk.size() < n) {
    const Neighbor* pick = nullptr;
    for (const Neighbor& nb : g.neighbors(walk.back())) {
      if (visited[nb.node]) continue;
      if (pick == nullptr || nb.length < pick->length) pick = &nb;
    }
    if (pick == nullptr) {
      return fail(heuristic_names::nearest_neighbor,
                  "dead end at node " + std::to_string(walk.back()), walk);
    }
    visited[pick->node] = true;
    walk.push_back(pick->node);
  }
  if (!g.has_edge(walk.back(), start)) {
    return fail(heuristic_names::nearest_neighbor, "no closing edge back to the start", walk);
  }
  return finish(canonical_ring(walk, g), heuristic_names::nearest_neighbor, started);
}

HeuristicResult greedy_edge(const TspInstance& instance) {
  const auto started = Clock::now();
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  if (n < 3) return fail(heuristic_names::greedy_edge, "graph has fewer than 3 nodes");

  std::vector<Edge> order(g.edges().begin(), g.edges().end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Edge& a, const Edge& b) { return a.length < b.length; });

  std::vector<NodeId> component(n + 1);
  std::iota(component.begin(), component.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (component[x] != x) x = component[x] = component[component[x]];
    return x;
  };
  std::vector<std::size_t> degree(n + 1, 0);
  std::vector<std::vector<NodeId>> chosen(n + 1);
  std::vector<NodeId> taken_pairs;
  std::size_t taken = 0;
  for (const Edge& e : order) {
    if (degree[e.u] == 2 || degree[e.v] == 2) continue;
    const NodeId a = find(e.u);
    const NodeId b = find(e.v);
    if (a == b && taken != n - 1) continue;
    component[a] = b;
    ++degree[e.u];
    ++degree[e.v];
    chosen[e.u].push_back(e.v);
    chosen[e.v].push_back(e.u);
    taken_pairs.push_back(e.u);
    taken_pairs.push_back(e.v);
    if (++taken == n) break;
  }
  if (taken != n) {
    return fail(heuristic_names::greedy_edge,
                "only " + std::to_string(taken) + " of " + std::to_string(n) + " ring edges found",
                taken_pairs);
  }

  std::vector<NodeId> walk{1};
  NodeId prev = 0;
  NodeId cur = 1;
  while (walk.size() < n) {
    const NodeId next = chosen[cur][0] != prev ? chosen[cur][0] : chosen[cur][1];
    walk.push_back(next);
    prev = cur;
    cur = next;
  }
  return finish(canonical_ring(walk, g), heuristic_names::greedy_edge, started);
}

HeuristicOutcome two_opt(const TspInstance& instance, const Ring& start_ring) {
  const auto started = Clock::now();
  const auto& g = instance.graph;
  std::vector<NodeId> tour = canonical_ring(start_ring.sequence, g).sequence;
  const std::size_t n = tour.size();

  for (;;) {
    Length best_gain = 0;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    // Replace (t[i], t[i+1]) and (t[j], t[j+1]) by (t[i], t[j]) and
    // (t[i+1], t[j+1]), reversing t[i+1..j].
    for (std::size_t i = 0; i + 2 < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        const NodeId a = tour[i], b = tour[i + 1], c = tour[j], d = tour[(j + 1) % n];
        const auto ac = g.edge_length(a, c);
        const auto bd = g.edge_length(b, d);
        if (!ac || !bd) continue;
        const Length gain = *g.edge_length(a, b) + *g.edge_length(c, d) - *ac - *bd;
        if (gain > best_gain) {
          best_gain = gain;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_gain == 0) break;
    std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(best_i + 1),
                 tour.begin() + static_cast<std::ptrdiff_t>(best_j + 1));
  }
  return finish(canonical_ring(tour, g), heuristic_names::two_opt, started);
}

HeuristicResult random_allowable_ring(const TspInstance& instance, std::uint64_t seed,
                                      std::uint64_t max_attempts) {
  const auto started = Clock::now();
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  if (n < 3) return fail(heuristic_names::random, "graph has fewer than 3 nodes");
  Rng rng(seed);
  std::vector<NodeId> perm(n);
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::iota(perm.begin(), perm.end(), NodeId{1});
    rng.shuffle(perm);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = g.has_edge(perm[i], perm[(i + 1) % n]);
    if (ok) return finish(canonical_ring(perm, g), heuristic_names::random, started);
  }
  return fail(heuristic_names::random,
              "no allowable ring in " + std::to_string(max_attempts) + " attempts");
}

HeuristicResult dijkstra(const PathInstance& instance) {
  const auto started = Clock::now();
  validate(instance);
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  constexpr Length kUnset = -1;
  std::vector<Length> dist(n + 1, kUnset);
  std::vector<NodeId> parent(n + 1, 0);
  std::vector<bool> done(n + 1, false);
  using Entry = std::pair<Length, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[instance.source] = 0;
  queue.push({0, instance.source});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == instance.target) break;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (done[nb.node]) continue;
      const Length nd = d + nb.length;
      if (dist[nb.node] == kUnset || nd < dist[nb.node]) {
        dist[nb.node] = nd;
        parent[nb.node] = u;
        queue.push({nd, nb.node});
      }
    }
  }
  if (!done[instance.target]) {
    return fail(heuristic_names::dijkstra, "target " + std::to_string(instance.target) +
                                               " is unreachable from " +
                                               std::to_string(instance.source));
  }
  PathAnswer path;
  path.length = dist[instance.target];
  for (NodeId u = instance.target; u != instance.source; u = parent[u]) path.sequence.push_back(u);
  path.sequence.push_back(instance.source);
  std::reverse(path.sequence.begin(), path.sequence.end());
  return finish(std::move(path), heuristic_names::dijkstra, started);
}

HeuristicOutcome greedy_knapsack(const KnapsackInstance& instance) {
  const auto started = Clock::now();
  validate(instance);
  const auto& items = instance.items;
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // value_a / weight_a > value_b / weight_b, compared exactly.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return static_cast<__int128>(items[a].value) * items[b].weight >
           static_cast<__int128>(items[b].value) * items[a].weight;
  });
  SubsetAnswer s;
  for (std::size_t i : order) {
    if (s.weight + items[i].weight > instance.capacity) continue;
    s.weight += items[i].weight;
    s.value += items[i].value;
    s.chosen.push_back(i);
  }
  std::sort(s.chosen.begin(), s.chosen.end());
  return finish(std::move(s), heuristic_names::greedy_knapsack, started);
}

HeuristicOutcome greedy_partition(const PartitionInstance& instance) {
  const auto started = Clock::now();
  validate(instance);
  const auto& numbers = instance.numbers;
  std::vector<std::size_t> order(numbers.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return numbers[a] > numbers[b]; });
  std::int64_t sum_a = 0;
  std::int64_t sum_b = 0;
  std::vector<bool> on_a(numbers.size(), false);
  for (std::size_t i : order) {
    if (sum_a <= sum_b) {
      sum_a += numbers[i];
      on_a[i] = true;
    } else {
      sum_b += numbers[i];
    }
  }
  const bool flip = !on_a[0];
  SubsetAnswer s;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (on_a[i] != flip) s.chosen.push_back(i);
  }
  s.weight = flip ? sum_b : sum_a;
  s.value = sum_a > sum_b ? sum_a - sum_b : sum_b - sum_a;
  return finish(std::move(s), heuristic_names::greedy_partition, started);
}

}  // namespace answerrank
