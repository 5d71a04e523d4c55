// Parallel enumeration kernels. Work is split into independent tasks whose
// outputs are concatenated in task order and then sorted by AnswerSet, so the
// result never depends on the worker count.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "answerrank/oracle.hpp"

namespace answerrank {

namespace {

int worker_count(const EnumerationOptions& options) {
#ifdef _OPENMP
  return options.threads > 0 ? options.threads : omp_get_max_threads();
#else
  (void)options;
  return 1;
#endif
}

template <class T>
std::vector<T> concatenate(std::vector<std::vector<T>>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(out));
    std::vector<T>().swap(p);
  }
  return out;
}

// Runs body(task, sink) for every task in [0, count) and gathers the sinks.
template <class T, class Body>
std::vector<T> run_tasks(std::size_t count, int threads, Body body) {
  std::vector<std::vector<T>> parts(count);
  const auto signed_count = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t t = 0; t < signed_count; ++t) {
    body(static_cast<std::size_t>(t), parts[static_cast<std::size_t>(t)]);
  }
  return concatenate(parts);
}

// Depth-first ring search with 1 fixed first and second < last.
class RingSearch {
 public:
  explicit RingSearch(const WeightedGraph& g) : n_(g.node_count()) {
    weight_.assign((n_ + 1) * (n_ + 1), -1);
    adjacency_.resize(n_ + 1);
    for (const Edge& e : g.edges()) {
      weight_[e.u * (n_ + 1) + e.v] = e.length;
      weight_[e.v * (n_ + 1) + e.u] = e.length;
    }
    for (NodeId u = 1; u <= n_; ++u) {
      for (const Neighbor& nb : g.neighbors(u)) adjacency_[u].push_back(nb.node);
    }
  }

  Length weight(NodeId a, NodeId b) const { return weight_[a * (n_ + 1) + b]; }
  const std::vector<NodeId>& adjacent(NodeId u) const { return adjacency_[u]; }

  // Every ring whose sequence begins 1, second, third.
  void run(NodeId second, NodeId third, std::vector<Ring>& out) {
    second_ = second;
    closers_ = 0;
    for (NodeId c : adjacency_[1]) {
      if (c > second) closers_ |= std::uint32_t{1} << c;
    }
    if (closers_ == 0) return;
    path_.assign(n_, 0);
    path_[0] = 1;
    path_[1] = second;
    path_[2] = third;
    const std::uint32_t visited = (1u << 1) | (1u << second) | (1u << third);
    extend(3, visited, weight(1, second) + weight(second, third), out);
  }

 private:
  void extend(std::size_t depth, std::uint32_t visited, Length length,
              std::vector<Ring>& out) {
    if (depth == n_) {
      const NodeId last = path_[n_ - 1];
      const Length closing = weight(last, 1);
      if (last > second_ && closing >= 0) out.push_back({path_, length + closing});
      return;
    }
    if ((closers_ & ~visited) == 0) return;
    const NodeId tail = path_[depth - 1];
    for (NodeId next : adjacency_[tail]) {
      if (visited >> next & 1) continue;
      path_[depth] = next;
      extend(depth + 1, visited | (std::uint32_t{1} << next), length + weight(tail, next), out);
    }
  }

  std::size_t n_;
  std::vector<Length> weight_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<NodeId> path_;
  NodeId second_ = 0;
  std::uint32_t closers_ = 0;
};

std::uint64_t checked_mask_count(std::size_t bits, const char* cap, std::size_t limit) {
  if (bits > limit) throw CapExceeded(cap, limit, bits);
  return std::uint64_t{1} << bits;
}

}  // namespace

AnswerSet<Ring> enumerate_rings(const TspInstance& instance,
                                const EnumerationOptions& options) {
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  const std::size_t limit = std::min(options.caps.max_ring_nodes, kRingNodeLimit);
  if (n > limit) throw CapExceeded("max_ring_nodes", limit, n);
  if (n < 3) return AnswerSet<Ring>(Direction::minimize, {}, possible_answer_count(n));

  const RingSearch prototype(g);
  std::vector<std::pair<NodeId, NodeId>> tasks;
  for (NodeId second : prototype.adjacent(1)) {
    for (NodeId third : prototype.adjacent(second)) {
      if (third != 1) tasks.emplace_back(second, third);
    }
  }

  auto rings = run_tasks<Ring>(tasks.size(), worker_count(options),
                               [&](std::size_t t, std::vector<Ring>& sink) {
                                 RingSearch search = prototype;
                                 search.run(tasks[t].first, tasks[t].second, sink);
                               });
  return AnswerSet<Ring>(Direction::minimize, std::move(rings), possible_answer_count(n));
}

AnswerSet<Assignment> enumerate_assignments(const CnfFormula& formula,
                                            const EnumerationOptions& options) {
  validate(formula);
  const std::size_t k = formula.variable_count;
  const std::uint64_t total =
      checked_mask_count(k, "max_sat_variables", options.caps.max_sat_variables);

  // Variable v maps to bit (k - v), so ascending masks are ascending
  // assignments with false < true.
  struct ClauseMasks {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
  };
  std::vector<ClauseMasks> clauses;
  for (const auto& clause : formula.clauses) {
    ClauseMasks m;
    for (Literal lit : clause) {
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      (lit > 0 ? m.positive : m.negative) |= std::uint64_t{1} << (k - var);
    }
    clauses.push_back(m);
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 256);
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  auto found = run_tasks<Assignment>(
      chunks, worker_count(options), [&](std::size_t c, std::vector<Assignment>& sink) {
        const std::uint64_t lo = c * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          const bool sat = std::all_of(clauses.begin(), clauses.end(), [mask](const ClauseMasks& m) {
            return (mask & m.positive) != 0 || (~mask & m.negative) != 0;
          });
          if (!sat) continue;
          Assignment a;
          a.values.resize(k);
          for (std::size_t v = 0; v < k; ++v) a.values[v] = (mask >> (k - 1 - v)) & 1;
          sink.push_back(std::move(a));
        }
      });
  return AnswerSet<Assignment>(Direction::maximize, std::move(found), BigInt(1) << k);
}

namespace {

// Sweeps every mask over `bits` items in parallel chunks.
template <class Visit>
std::vector<SubsetAnswer> sweep_subsets(std::size_t bits, int threads, Visit visit) {
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 256);
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  return run_tasks<SubsetAnswer>(chunks, threads,
                                 [&](std::size_t c, std::vector<SubsetAnswer>& sink) {
                                   const std::uint64_t lo = c * chunk;
                                   const std::uint64_t hi = std::min(total, lo + chunk);
                                   for (std::uint64_t mask = lo; mask < hi; ++mask) {
                                     visit(mask, sink);
                                   }
                                 });
}

}  // namespace

AnswerSet<SubsetAnswer> enumerate_knapsack(const KnapsackInstance& instance,
                                           const EnumerationOptions& options) {
  validate(instance);
  const std::size_t m = instance.items.size();
  checked_mask_count(m, "max_subset_items", options.caps.max_subset_items);
  auto found = sweep_subsets(m, worker_count(options),
                             [&](std::uint64_t mask, std::vector<SubsetAnswer>& sink) {
                               std::int64_t weight = 0;
                               std::int64_t value = 0;
                               for (std::size_t i = 0; i < m; ++i) {
                                 if (mask >> i & 1) {
                                   weight += instance.items[i].weight;
                                   value += instance.items[i].value;
                                 }
                               }
                               if (weight > instance.capacity) return;
                               SubsetAnswer s;
                               for (std::size_t i = 0; i < m; ++i) {
                                 if (mask >> i & 1) s.chosen.push_back(i);
                               }
                               s.value = value;
                               s.weight = weight;
                               sink.push_back(std::move(s));
                             });
  return AnswerSet<SubsetAnswer>(Direction::maximize, std::move(found), BigInt(1) << m);
}

AnswerSet<SubsetAnswer> enumerate_partition(const PartitionInstance& instance,
                                            const EnumerationOptions& options) {
  validate(instance);
  const std::size_t m = instance.numbers.size();
  checked_mask_count(m, "max_subset_items", options.caps.max_subset_items);
  std::int64_t total = 0;
  for (auto x : instance.numbers) total += x;
  // Item 0 is always on side A; bit i of the mask places item i + 1.
  auto found = sweep_subsets(m - 1, worker_count(options),
                             [&](std::uint64_t mask, std::vector<SubsetAnswer>& sink) {
                               SubsetAnswer s;
                               s.chosen.push_back(0);
                               std::int64_t side_a = instance.numbers[0];
                               for (std::size_t i = 1; i < m; ++i) {
                                 if (mask >> (i - 1) & 1) {
                                   s.chosen.push_back(i);
                                   side_a += instance.numbers[i];
                                 }
                               }
                               s.weight = side_a;
                               s.value = side_a * 2 > total ? side_a * 2 - total : total - side_a * 2;
                               sink.push_back(std::move(s));
                             });
  return AnswerSet<SubsetAnswer>(Direction::minimize, std::move(found), BigInt(1) << m);
}

}  // namespace answerrank
