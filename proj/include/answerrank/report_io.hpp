#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "answerrank/answer_set.hpp"
#include "answerrank/answers.hpp"
#include "answerrank/heuristics.hpp"
#include "answerrank/metrics.hpp"
#include "answerrank/sensitivity.hpp"
#include "answerrank/verification.hpp"

namespace answerrank {

inline constexpr int kSchemaVersion = 1;

inline constexpr const char* kAnswerCsvHeader = "rating_position,sequence,objective";
inline constexpr const char* kReportCsvHeader =
    "objective,exact,radial,relative_radial,rating_position,"
    "positional_accuracy,deviation_accuracy,total_positions,total_answers";

// Rationals are written as "num/den" strings, big integers as decimal strings.
nlohmann::ordered_json to_json(const AccuracyReport& report);
std::string to_csv_row(const AccuracyReport& report);

nlohmann::ordered_json to_json(const VerificationVerdict& verdict);
nlohmann::ordered_json to_json(const PerturbationReport& report);
nlohmann::ordered_json to_json(const HeuristicOutcome& outcome);
nlohmann::ordered_json to_json(const HeuristicFailure& failure);

// One row per answer, best first.
template <class Answer>
void write_answer_csv(std::ostream& out, const AnswerSet<Answer>& answers) {
  out << kAnswerCsvHeader << '\n';
  for (std::size_t g = 0; g < answers.group_count(); ++g) {
    for (const Answer& a : answers.group(g)) {
      out << g + 1 << ',' << format_answer(a) << ',' << a.objective() << '\n';
    }
  }
}

}  // namespace answerrank
