#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "answerrank/answer_set.hpp"
#include "answerrank/answers.hpp"
#include "answerrank/instances.hpp"
#include "answerrank/oracle.hpp"

namespace answerrank {

// perturb_and_profile precondition failure; `side` is "original" or
// "perturbed".
class RinglessInstance : public std::runtime_error {
 public:
  explicit RinglessInstance(std::string side)
      : std::runtime_error("the " + side + " instance has no ring"),
        side_(std::move(side)) {}
  const std::string& side() const { return side_; }

 private:
  std::string side_;
};

struct PerturbationReport {
  NodeId edge_u = 0;
  NodeId edge_v = 0;
  Length old_edge_length = 0;
  Length new_edge_length = 0;
  // Requested relative change, scale - 1.
  Rational relative_change{0};
  Ring old_exact;
  Ring new_exact;
  std::size_t old_optimum_new_position = 0;
  std::size_t new_optimum_old_position = 0;
  bool sequence_changed = false;
  std::size_t edge_overlap = 0;
  std::size_t old_group_count = 0;
  std::size_t new_group_count = 0;
  std::size_t ring_count = 0;

  bool operator==(const PerturbationReport&) const = default;
};

struct RankTrajectory {
  std::size_t before = 0;
  std::size_t after = 0;
  bool operator==(const RankTrajectory&) const = default;
};

// The representative exact answer of a ring set is the first ring of its
// best group (lexicographically smallest among ties).
PerturbationReport perturb_and_profile(const TspInstance& instance,
                                       const PerturbationSpec& spec,
                                       const EnumerationOptions& options = {});

// Same, reusing enumerations that the caller already holds.
PerturbationReport profile_enumerations(const WeightedGraph& before_graph,
                                        const AnswerSet<Ring>& before,
                                        const WeightedGraph& after_graph,
                                        const AnswerSet<Ring>& after,
                                        const PerturbationSpec& spec);

RankTrajectory rank_trajectory(const TspInstance& instance,
                               const PerturbationSpec& spec, const Ring& answer,
                               const EnumerationOptions& options = {});

// Lengths of `answer` are recomputed in each graph before ranking.
RankTrajectory rank_trajectory(const WeightedGraph& before_graph,
                               const Ranking& before,
                               const WeightedGraph& after_graph,
                               const Ranking& after, const Ring& answer);

// Number of undirected edges two rings share.
std::size_t shared_edge_count(const Ring& a, const Ring& b);

}  // namespace answerrank
