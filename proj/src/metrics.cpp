#include "answerrank/metrics.hpp"

namespace answerrank {

std::size_t rating_position(const Ranking& answers, Objective value) {
  const std::size_t g = answers.find_group(value);
  if (g == answers.group_count()) {
    throw MetricError("objective value " + std::to_string(value) +
                      " does not occur among the allowable answers");
  }
  return g + 1;
}

Objective radial_accuracy(Objective value, Objective exact_value) {
  return value > exact_value ? value - exact_value : exact_value - value;
}

std::optional<Rational> relative_radial_accuracy(Objective value, Objective exact_value) {
  if (exact_value == 0) return std::nullopt;
  return Rational(radial_accuracy(value, exact_value),
                  exact_value < 0 ? -exact_value : exact_value);
}

Rational deviation_accuracy(const Ranking& answers, Objective value) {
  const std::size_t position = rating_position(answers, value);
  const std::size_t groups = answers.group_count();
  if (groups <= 1) return Rational(0);
  return Rational(static_cast<std::int64_t>(position - 1), static_cast<std::int64_t>(groups - 1));
}

AccuracyReport build_report(const Ranking& answers, Objective value) {
  if (answers.empty()) throw MetricError("cannot grade against an empty answer set");
  AccuracyReport r;
  r.objective = value;
  r.exact = answers.group_value(0);
  r.radial = radial_accuracy(value, r.exact);
  r.relative_radial = relative_radial_accuracy(value, r.exact);
  r.rating_position = rating_position(answers, value);
  r.positional_accuracy = r.rating_position;
  r.deviation_accuracy = deviation_accuracy(answers, value);
  r.total_positions = answers.group_count();
  r.total_answers = answers.total_answers();
  return r;
}

AccuracyReport build_report(const Ranking& answers, const HeuristicOutcome& outcome) {
  return build_report(answers, outcome.objective());
}

}  // namespace answerrank
