#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "answerrank/types.hpp"

namespace answerrank {

// Raised for a structurally readable instance that breaks one of its
// invariants. `rule` is a stable identifier such as "duplicate_edge".
class InstanceError : public std::runtime_error {
 public:
  InstanceError(std::string rule, const std::string& message)
      : std::runtime_error(message), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Length length = 0;

  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  NodeId node = 0;
  Length length = 0;
};

// Undirected graph on nodes 1..n with integer edge lengths.
//
// Edges are normalized to u < v and kept sorted by (u, v). Construction
// rejects self-loops, out-of-range endpoints, negative lengths and duplicate
// unordered pairs. Edge lookup is constant time.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  // Neighbors of `u` sorted by node id.
  std::span<const Neighbor> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const { return neighbors(u).size(); }

  bool contains(NodeId u) const { return u >= 1 && u <= node_count_; }
  bool has_edge(NodeId u, NodeId v) const { return edge_length(u, v).has_value(); }
  std::optional<Length> edge_length(NodeId u, NodeId v) const;

  bool operator==(const WeightedGraph& other) const {
    return node_count_ == other.node_count_ && edges_ == other.edges_;
  }

 private:
  static std::uint64_t key(NodeId u, NodeId v);

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adjacency_begin_;
  std::vector<Neighbor> adjacency_;
  std::unordered_map<std::uint64_t, Length> index_;
};

struct TspInstance {
  WeightedGraph graph;
  bool operator==(const TspInstance&) const = default;
};

struct PathInstance {
  WeightedGraph graph;
  NodeId source = 0;
  NodeId target = 0;
  bool operator==(const PathInstance&) const = default;
};

struct KnapsackItem {
  std::int64_t weight = 0;
  std::int64_t value = 0;
  bool operator==(const KnapsackItem&) const = default;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t capacity = 0;
  bool operator==(const KnapsackInstance&) const = default;
};

struct PartitionInstance {
  std::vector<std::int64_t> numbers;
  bool operator==(const PartitionInstance&) const = default;
};

// A literal is a signed 1-based variable index.
using Literal = std::int32_t;

struct CnfFormula {
  std::size_t variable_count = 0;
  std::vector<std::vector<Literal>> clauses;
  bool operator==(const CnfFormula&) const = default;
};

using Instance = std::variant<TspInstance, PathInstance, KnapsackInstance,
                              PartitionInstance, CnfFormula>;

// Task keyword used in the instance format and on the command line.
std::string_view task_name(const Instance& instance);

// Invariant checks; each throws InstanceError naming the broken rule.
void validate(const PathInstance& instance);
void validate(const KnapsackInstance& instance);
void validate(const PartitionInstance& instance);
void validate(const CnfFormula& formula);

// Nodes with fewer than two incident edges. Such an instance is still
// accepted; a ring may exist or not either way.
std::vector<std::string> validation_warnings(const TspInstance& instance);

// Syntax or invariant failure while reading an instance document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string rule, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        rule_(std::move(rule)) {}

  std::size_t line() const { return line_; }
  // "syntax", "unknown_task", or the name of the broken invariant.
  const std::string& rule() const { return rule_; }

 private:
  std::size_t line_;
  std::string rule_;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

struct PerturbationSpec {
  NodeId u = 0;
  NodeId v = 0;
  std::int64_t numerator = 1;
  std::int64_t denominator = 1;
};

// Copy of `graph` with the named edge rescaled to
// round-half-up(length * numerator / denominator).
WeightedGraph apply_perturbation(const WeightedGraph& graph,
                                 const PerturbationSpec& spec);

WeightedGraph scale_all_weights(const WeightedGraph& graph, std::int64_t factor);

}  // namespace answerrank
