#pragma once

#include <span>
#include <string>
#include <vector>

#include "answerrank/instances.hpp"

namespace answerrank {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationVerdict {
  bool accepted = false;
  std::vector<Check> checks;

  const Check* find(std::string_view name) const;
};

// Ring check names, in the order they run.
namespace ring_checks {
inline constexpr const char* closes = "closes";
inline constexpr const char* node_coverage = "node_coverage";
inline constexpr const char* edges_exist = "edges_exist";
inline constexpr const char* length_matches = "length_matches";
}  // namespace ring_checks

// Allowability of a claimed ring. Uses only the graph; never ranks.
VerificationVerdict verify_ring_claim(const WeightedGraph& graph,
                                      std::span<const NodeId> sequence,
                                      Length claimed_length);

// Checks: endpoints, distinct_nodes, edges_exist, length_matches.
VerificationVerdict verify_path_claim(const PathInstance& instance,
                                      std::span<const NodeId> sequence,
                                      Length claimed_length);

// One check per clause, named "clause_<k>" (1-based). Throws InstanceError
// ("assignment_length") when the assignment has the wrong length.
VerificationVerdict verify_assignment(const CnfFormula& formula,
                                      const std::vector<bool>& assignment);

}  // namespace answerrank
