#include "answerrank/instances.hpp"

#include <algorithm>
#include <limits>

namespace answerrank {

namespace {

std::string pair_name(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::uint64_t WeightedGraph::key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ == 0) {
    throw InstanceError("node_count", "graph must have at least one node");
  }
  if (node_count_ > std::numeric_limits<NodeId>::max() - 1) {
    throw InstanceError("node_count", "node count too large");
  }
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw InstanceError("self_loop", "self-loop at node " + std::to_string(e.u));
    }
    if (!contains(e.u) || !contains(e.v)) {
      throw InstanceError("node_out_of_range",
                          "edge " + pair_name(e.u, e.v) + " references a node outside 1.." +
                              std::to_string(node_count_));
    }
    if (e.length < 0) {
      throw InstanceError("negative_length",
                          "edge " + pair_name(e.u, e.v) + " has negative length");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  index_.reserve(edges_.size() * 2);
  std::vector<std::size_t> degree(node_count_ + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!index_.emplace(key(e.u, e.v), e.length).second) {
      throw InstanceError("duplicate_edge", "duplicate edge " + pair_name(e.u, e.v));
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  adjacency_begin_.assign(node_count_ + 2, 0);
  for (std::size_t u = 1; u <= node_count_; ++u) {
    adjacency_begin_[u + 1] = adjacency_begin_[u] + degree[u];
  }
  adjacency_.resize(edges_.size() * 2);
  std::vector<std::size_t> fill(adjacency_begin_.begin(), adjacency_begin_.end() - 1);
  for (const Edge& e : edges_) adjacency_[fill[e.v]++] = {e.u, e.length};
  for (const Edge& e : edges_) adjacency_[fill[e.u]++] = {e.v, e.length};
  for (std::size_t u = 1; u <= node_count_; ++u) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_begin_[u]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_begin_[u + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

std::span<const Neighbor> WeightedGraph::neighbors(NodeId u) const {
  if (!contains(u)) return {};
  return std::span<const Neighbor>(adjacency_)
      .subspan(adjacency_begin_[u], adjacency_begin_[u + 1] - adjacency_begin_[u]);
}

std::optional<Length> WeightedGraph::edge_length(NodeId u, NodeId v) const {
  if (u == v) return std::nullopt;
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view task_name(const Instance& instance) {
  static constexpr std::string_view names[] = {"tsp", "path", "knapsack",
                                               "partition", "cnf"};
  return names[instance.index()];
}

void validate(const PathInstance& instance) {
  const auto& g = instance.graph;
  if (!g.contains(instance.source) || !g.contains(instance.target)) {
    throw InstanceError("endpoint_out_of_range", "source and target must be in 1.." +
                                                     std::to_string(g.node_count()));
  }
  if (instance.source == instance.target) {
    throw InstanceError("source_equals_target", "source and target must differ");
  }
}

void validate(const KnapsackInstance& instance) {
  if (instance.items.empty()) {
    throw InstanceError("empty_items", "knapsack needs at least one item");
  }
  if (instance.capacity <= 0) {
    throw InstanceError("nonpositive_capacity", "capacity must be positive");
  }
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& item = instance.items[i];
    if (item.weight <= 0 || item.value <= 0) {
      throw InstanceError("nonpositive_item", "item " + std::to_string(i + 1) +
                                                  " needs positive weight and value");
    }
  }
}

void validate(const PartitionInstance& instance) {
  if (instance.numbers.empty()) {
    throw InstanceError("empty_numbers", "partition needs at least one number");
  }
  for (std::size_t i = 0; i < instance.numbers.size(); ++i) {
    if (instance.numbers[i] <= 0) {
      throw InstanceError("nonpositive_number",
                          "number " + std::to_string(i + 1) + " must be positive");
    }
  }
}

void validate(const CnfFormula& formula) {
  if (formula.variable_count == 0) {
    throw InstanceError("variable_count", "formula needs at least one variable");
  }
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& clause = formula.clauses[c];
    if (clause.empty()) {
      throw InstanceError("empty_clause", "clause " + std::to_string(c + 1) + " is empty");
    }
    for (Literal lit : clause) {
      if (lit == 0) {
        throw InstanceError("zero_literal",
                            "clause " + std::to_string(c + 1) + " contains literal 0");
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -static_cast<std::int64_t>(lit) : lit);
      if (var > formula.variable_count) {
        throw InstanceError("literal_out_of_range",
                            "clause " + std::to_string(c + 1) + " references variable " +
                                std::to_string(var));
      }
    }
  }
}

std::vector<std::string> validation_warnings(const TspInstance& instance) {
  std::vector<std::string> warnings;
  const auto& g = instance.graph;
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (g.degree(u) < 2) {
      warnings.push_back("node " + std::to_string(u) + " has degree " +
                         std::to_string(g.degree(u)) + " (< 2)");
    }
  }
  return warnings;
}

WeightedGraph apply_perturbation(const WeightedGraph& graph,
                                 const PerturbationSpec& spec) {
  if (spec.numerator <= 0 || spec.denominator <= 0) {
    throw InstanceError("scale", "scale numerator and denominator must be positive");
  }
  if (!graph.has_edge(spec.u, spec.v)) {
    throw InstanceError("missing_edge",
                        "edge " + pair_name(spec.u, spec.v) + " is not in the graph");
  }
  const NodeId u = std::min(spec.u, spec.v);
  const NodeId v = std::max(spec.u, spec.v);
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  for (Edge& e : edges) {
    if (e.u == u && e.v == v) {
      // floor((2 * len * num + den) / (2 * den)) rounds halves up.
      const __int128 scaled = static_cast<__int128>(e.length) * spec.numerator;
      const __int128 rounded = (2 * scaled + spec.denominator) / (2 * static_cast<__int128>(spec.denominator));
      if (rounded > std::numeric_limits<Length>::max()) {
        throw InstanceError("overflow", "perturbed length overflows");
      }
      e.length = static_cast<Length>(rounded);
    }
  }
  return WeightedGraph(graph.node_count(), std::move(edges));
}

WeightedGraph scale_all_weights(const WeightedGraph& graph, std::int64_t factor) {
  if (factor < 1) throw InstanceError("scale", "scale factor must be >= 1");
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  for (Edge& e : edges) {
    if (__builtin_mul_overflow(e.length, factor, &e.length)) {
      throw InstanceError("overflow", "scaled length overflows");
    }
  }
  return WeightedGraph(graph.node_count(), std::move(edges));
}

}  // namespace answerrank
