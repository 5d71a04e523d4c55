#include "answerrank/sensitivity.hpp"

#include <set>

#include "answerrank/metrics.hpp"

namespace answerrank {

namespace {

Length length_in(const WeightedGraph& g, const Ring& ring) {
  return canonical_ring(ring.sequence, g).length;
}

std::set<std::pair<NodeId, NodeId>> ring_edges(const Ring& r) {
  std::set<std::pair<NodeId, NodeId>> edges;
  const std::size_t n = r.sequence.size();
  for (std::size_t i = 0; i < n; ++i) {
    NodeId a = r.sequence[i];
    NodeId b = r.sequence[(i + 1) % n];
    if (a > b) std::swap(a, b);
    edges.emplace(a, b);
  }
  return edges;
}

}  // namespace

std::size_t shared_edge_count(const Ring& a, const Ring& b) {
  const auto ea = ring_edges(a);
  std::size_t shared = 0;
  for (const auto& e : ring_edges(b)) shared += ea.count(e);
  return shared;
}

PerturbationReport profile_enumerations(const WeightedGraph& before_graph,
                                        const AnswerSet<Ring>& before,
                                        const WeightedGraph& after_graph,
                                        const AnswerSet<Ring>& after,
                                        const PerturbationSpec& spec) {
  if (before.empty()) throw RinglessInstance("original");
  if (after.empty()) throw RinglessInstance("perturbed");

  PerturbationReport r;
  r.edge_u = std::min(spec.u, spec.v);
  r.edge_v = std::max(spec.u, spec.v);
  r.old_edge_length = before_graph.edge_length(spec.u, spec.v).value_or(0);
  r.new_edge_length = after_graph.edge_length(spec.u, spec.v).value_or(0);
  r.relative_change = Rational(spec.numerator - spec.denominator, spec.denominator);
  r.old_exact = before.group(0).front();
  r.new_exact = after.group(0).front();
  r.old_optimum_new_position =
      rank_trajectory(before_graph, before, after_graph, after, r.old_exact).after;
  r.new_optimum_old_position =
      rank_trajectory(before_graph, before, after_graph, after, r.new_exact).before;
  r.sequence_changed = r.old_exact.sequence != r.new_exact.sequence;
  r.edge_overlap = shared_edge_count(r.old_exact, r.new_exact);
  r.old_group_count = before.group_count();
  r.new_group_count = after.group_count();
  r.ring_count = before.total_answers();
  return r;
}

PerturbationReport perturb_and_profile(const TspInstance& instance,
                                       const PerturbationSpec& spec,
                                       const EnumerationOptions& options) {
  const TspInstance perturbed{apply_perturbation(instance.graph, spec)};
  const auto before = enumerate_rings(instance, options);
  if (before.empty()) throw RinglessInstance("original");
  const auto after = enumerate_rings(perturbed, options);
  return profile_enumerations(instance.graph, before, perturbed.graph, after, spec);
}

RankTrajectory rank_trajectory(const WeightedGraph& before_graph, const Ranking& before,
                               const WeightedGraph& after_graph, const Ranking& after,
                               const Ring& answer) {
  return {rating_position(before, length_in(before_graph, answer)),
          rating_position(after, length_in(after_graph, answer))};
}

RankTrajectory rank_trajectory(const TspInstance& instance, const PerturbationSpec& spec,
                               const Ring& answer, const EnumerationOptions& options) {
  const WeightedGraph after_graph = apply_perturbation(instance.graph, spec);
  const auto before = enumerate_rings(instance, options);
  const auto after = enumerate_rings(TspInstance{after_graph}, options);
  return rank_trajectory(instance.graph, before, after_graph, after, answer);
}

}  // namespace answerrank
