#include "answerrank/verification.hpp"

#include <cstdlib>
#include <limits>

namespace answerrank {

namespace {

// Sums edge lengths along consecutive pairs; nullopt on a missing edge or
// overflow. The closing pair is included when `closed` is set.
std::optional<Length> walk_length(const WeightedGraph& g, std::span<const NodeId> s,
                                  bool closed, std::string* missing) {
  Length total = 0;
  const std::size_t pairs = closed ? s.size() : (s.empty() ? 0 : s.size() - 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    const NodeId a = s[i];
    const NodeId b = s[(i + 1) % s.size()];
    const auto l = g.edge_length(a, b);
    if (!l) {
      if (missing) *missing = "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
      return std::nullopt;
    }
    if (__builtin_add_overflow(total, *l, &total)) {
      if (missing) *missing = "length overflow";
      return std::nullopt;
    }
  }
  return total;
}

VerificationVerdict finalize(std::vector<Check> checks) {
  VerificationVerdict v;
  v.accepted = !checks.empty();
  for (const Check& c : checks) v.accepted = v.accepted && c.passed;
  v.checks = std::move(checks);
  return v;
}

}  // namespace

const Check* VerificationVerdict::find(std::string_view name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationVerdict verify_ring_claim(const WeightedGraph& graph,
                                      std::span<const NodeId> sequence,
                                      Length claimed_length) {
  const std::size_t n = graph.node_count();
  std::vector<Check> checks;

  {
    Check c{ring_checks::closes, false, ""};
    if (sequence.size() < 3) {
      c.detail = "a ring needs at least 3 nodes";
    } else if (graph.has_edge(sequence.back(), sequence.front())) {
      c.passed = true;
    } else {
      c.detail = "no edge (" + std::to_string(sequence.back()) + ", " +
                 std::to_string(sequence.front()) + ")";
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{ring_checks::node_coverage, false, ""};
    std::vector<bool> seen(n + 1, false);
    std::string problem;
    for (NodeId u : sequence) {
      if (!graph.contains(u)) {
        problem = "node " + std::to_string(u) + " outside 1.." + std::to_string(n);
        break;
      }
      if (seen[u]) {
        problem = "node " + std::to_string(u) + " repeats";
        break;
      }
      seen[u] = true;
    }
    if (problem.empty() && sequence.size() != n) {
      problem = std::to_string(sequence.size()) + " nodes listed, graph has " + std::to_string(n);
    }
    c.passed = problem.empty();
    c.detail = problem;
    checks.push_back(std::move(c));
  }

  std::optional<Length> actual;
  {
    Check c{ring_checks::edges_exist, false, ""};
    std::string missing;
    if (sequence.size() < 2) {
      c.detail = "too few nodes to form edges";
    } else {
      actual = walk_length(graph, sequence, true, &missing);
      c.passed = actual.has_value();
      if (!c.passed) c.detail = "missing edge " + missing;
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{ring_checks::length_matches, false, ""};
    if (!actual) {
      c.detail = "length undefined without all edges";
    } else if (*actual == claimed_length) {
      c.passed = true;
    } else {
      c.detail = "actual length " + std::to_string(*actual) + ", claimed " +
                 std::to_string(claimed_length);
    }
    checks.push_back(std::move(c));
  }
  return finalize(std::move(checks));
}

VerificationVerdict verify_path_claim(const PathInstance& instance,
                                      std::span<const NodeId> sequence,
                                      Length claimed_length) {
  const auto& g = instance.graph;
  std::vector<Check> checks;

  {
    Check c{"endpoints", false, ""};
    if (sequence.empty()) {
      c.detail = "empty path";
    } else if (sequence.front() != instance.source || sequence.back() != instance.target) {
      c.detail = "path runs " + std::to_string(sequence.front()) + " to " +
                 std::to_string(sequence.back()) + ", expected " +
                 std::to_string(instance.source) + " to " + std::to_string(instance.target);
    } else {
      c.passed = true;
    }
    checks.push_back(std::move(c));
  }

  {
    Check c{"distinct_nodes", true, ""};
    std::vector<bool> seen(g.node_count() + 1, false);
    for (NodeId u : sequence) {
      if (!g.contains(u)) {
        c.passed = false;
        c.detail = "node " + std::to_string(u) + " outside the graph";
        break;
      }
      if (seen[u]) {
        c.passed = false;
        c.detail = "node " + std::to_string(u) + " repeats";
        break;
      }
      seen[u] = true;
    }
    checks.push_back(std::move(c));
  }

  std::string missing;
  const auto actual = sequence.empty() ? std::nullopt : walk_length(g, sequence, false, &missing);
  checks.push_back({ring_checks::edges_exist, actual.has_value(),
                    actual ? "" : (sequence.empty() ? "empty path" : "missing edge " + missing)});
  {
    Check c{ring_checks::length_matches, false, ""};
    if (!actual) {
      c.detail = "length undefined without all edges";
    } else if (*actual == claimed_length) {
      c.passed = true;
    } else {
      c.detail = "actual length " + std::to_string(*actual) + ", claimed " +
                 std::to_string(claimed_length);
    }
    checks.push_back(std::move(c));
  }
  return finalize(std::move(checks));
}

VerificationVerdict verify_assignment(const CnfFormula& formula,
                                      const std::vector<bool>& assignment) {
  if (assignment.size() != formula.variable_count) {
    throw InstanceError("assignment_length",
                        "assignment has " + std::to_string(assignment.size()) +
                            " values, formula has " + std::to_string(formula.variable_count) +
                            " variables");
  }
  std::vector<Check> checks;
  checks.reserve(formula.clauses.size());
  for (std::size_t i = 0; i < formula.clauses.size(); ++i) {
    const auto& clause = formula.clauses[i];
    bool satisfied = false;
    for (Literal lit : clause) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      if (var >= 1 && var <= assignment.size() && assignment[var - 1] == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    checks.push_back({"clause_" + std::to_string(i + 1), satisfied,
                      satisfied ? "" : "all literals false"});
  }
  VerificationVerdict v;
  v.accepted = true;
  for (const Check& c : checks) v.accepted = v.accepted && c.passed;
  v.checks = std::move(checks);
  return v;
}

}  // namespace answerrank
