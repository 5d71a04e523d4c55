#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "answerrank/answer_set.hpp"
#include "answerrank/heuristics.hpp"
#include "answerrank/types.hpp"

namespace answerrank {

// A graded value that does not occur in the answer set. Either the oracle
// or the heuristic is wrong.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AccuracyReport {
  Objective objective = 0;
  Objective exact = 0;
  Objective radial = 0;
  std::optional<Rational> relative_radial;  // absent when exact == 0
  std::size_t rating_position = 0;
  std::size_t positional_accuracy = 0;
  Rational deviation_accuracy{0};
  std::size_t total_positions = 0;
  std::size_t total_answers = 0;

  bool operator==(const AccuracyReport&) const = default;
};

// Dense rank: 1 + number of distinct values strictly better than `value`.
std::size_t rating_position(const Ranking& answers, Objective value);

Objective radial_accuracy(Objective value, Objective exact_value);

// radial / |exact|; nullopt when exact_value is 0.
std::optional<Rational> relative_radial_accuracy(Objective value,
                                                 Objective exact_value);

// (position - 1) / (group_count - 1), or 0 with a single group.
Rational deviation_accuracy(const Ranking& answers, Objective value);

AccuracyReport build_report(const Ranking& answers, Objective value);
AccuracyReport build_report(const Ranking& answers,
                            const HeuristicOutcome& outcome);

}  // namespace answerrank
