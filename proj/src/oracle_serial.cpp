// Reference kernels: plain sweeps, single-threaded, kept for tests and the
// enumeration benchmark.

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "answerrank/oracle.hpp"

namespace answerrank::serial {

AnswerSet<Ring> enumerate_rings(const TspInstance& instance, const Caps& caps) {
  const auto& g = instance.graph;
  const std::size_t n = g.node_count();
  const std::size_t limit = std::min(caps.max_ring_nodes, kRingNodeLimit);
  if (n > limit) throw CapExceeded("max_ring_nodes", limit, n);
  std::vector<Ring> rings;
  if (n >= 3) {
    // Permutations of 2..n after the fixed node 1; keep one direction.
    std::vector<NodeId> tail(n - 1);
    std::iota(tail.begin(), tail.end(), NodeId{2});
    do {
      if (tail.front() > tail.back()) continue;
      Length length = 0;
      NodeId prev = 1;
      bool ok = true;
      for (std::size_t i = 0; i <= tail.size() && ok; ++i) {
        const NodeId next = i < tail.size() ? tail[i] : NodeId{1};
        const auto l = g.edge_length(prev, next);
        if (!l) ok = false;
        else length += *l;
        prev = next;
      }
      if (!ok) continue;
      Ring r;
      r.sequence.reserve(n);
      r.sequence.push_back(1);
      r.sequence.insert(r.sequence.end(), tail.begin(), tail.end());
      r.length = length;
      rings.push_back(std::move(r));
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  return AnswerSet<Ring>(Direction::minimize, std::move(rings), possible_answer_count(n));
}

AnswerSet<Assignment> enumerate_assignments(const CnfFormula& formula, const Caps& caps) {
  validate(formula);
  const std::size_t k = formula.variable_count;
  if (k > caps.max_sat_variables) throw CapExceeded("max_sat_variables", caps.max_sat_variables, k);
  std::vector<Assignment> found;
  std::vector<bool> values(k, false);
  for (;;) {
    bool sat = true;
    for (const auto& clause : formula.clauses) {
      bool any = false;
      for (Literal lit : clause) {
        const bool v = values[static_cast<std::size_t>(std::abs(lit)) - 1];
        if ((lit > 0) == v) {
          any = true;
          break;
        }
      }
      if (!any) {
        sat = false;
        break;
      }
    }
    if (sat) found.push_back({values});
    // Binary increment, last variable least significant.
    std::size_t i = k;
    while (i > 0 && values[i - 1]) values[--i] = false;
    if (i == 0) break;
    values[i - 1] = true;
  }
  return AnswerSet<Assignment>(Direction::maximize, std::move(found), BigInt(1) << k);
}

namespace {

template <class Leaf>
void include_exclude(std::size_t i, std::size_t m, std::vector<std::size_t>& chosen, Leaf&& leaf) {
  if (i == m) {
    leaf(chosen);
    return;
  }
  include_exclude(i + 1, m, chosen, leaf);
  chosen.push_back(i);
  include_exclude(i + 1, m, chosen, leaf);
  chosen.pop_back();
}

}  // namespace

AnswerSet<SubsetAnswer> enumerate_knapsack(const KnapsackInstance& instance, const Caps& caps) {
  validate(instance);
  const std::size_t m = instance.items.size();
  if (m > caps.max_subset_items) throw CapExceeded("max_subset_items", caps.max_subset_items, m);
  std::vector<SubsetAnswer> found;
  std::vector<std::size_t> chosen;
  include_exclude(0, m, chosen, [&](const std::vector<std::size_t>& c) {
    SubsetAnswer s{c, 0, 0, true};
    for (auto i : c) {
      s.weight += instance.items[i].weight;
      s.value += instance.items[i].value;
    }
    if (s.weight <= instance.capacity) found.push_back(std::move(s));
  });
  return AnswerSet<SubsetAnswer>(Direction::maximize, std::move(found), BigInt(1) << m);
}

AnswerSet<SubsetAnswer> enumerate_partition(const PartitionInstance& instance, const Caps& caps) {
  validate(instance);
  const std::size_t m = instance.numbers.size();
  if (m > caps.max_subset_items) throw CapExceeded("max_subset_items", caps.max_subset_items, m);
  const std::int64_t total = std::accumulate(instance.numbers.begin(), instance.numbers.end(),
                                             std::int64_t{0});
  std::vector<SubsetAnswer> found;
  std::vector<std::size_t> chosen;
  include_exclude(0, m, chosen, [&](const std::vector<std::size_t>& c) {
    if (c.empty() || c.front() != 0) return;
    SubsetAnswer s{c, 0, 0, true};
    for (auto i : c) s.weight += instance.numbers[i];
    s.value = std::abs(2 * s.weight - total);
    found.push_back(std::move(s));
  });
  return AnswerSet<SubsetAnswer>(Direction::minimize, std::move(found), BigInt(1) << m);
}

}  // namespace answerrank::serial
