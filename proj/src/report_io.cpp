#include "answerrank/report_io.hpp"

#include <sstream>

namespace answerrank {

using nlohmann::ordered_json;

ordered_json to_json(const AccuracyReport& r) {
  ordered_json j;
  j["objective"] = r.objective;
  j["exact"] = r.exact;
  j["radial"] = r.radial;
  j["relative_radial"] = r.relative_radial ? ordered_json(to_string(*r.relative_radial))
                                           : ordered_json(nullptr);
  j["rating_position"] = r.rating_position;
  j["positional_accuracy"] = r.positional_accuracy;
  j["deviation_accuracy"] = to_string(r.deviation_accuracy);
  j["total_positions"] = r.total_positions;
  j["total_answers"] = r.total_answers;
  return j;
}

std::string to_csv_row(const AccuracyReport& r) {
  std::ostringstream out;
  out << r.objective << ',' << r.exact << ',' << r.radial << ','
      << (r.relative_radial ? to_string(*r.relative_radial) : std::string()) << ','
      << r.rating_position << ',' << r.positional_accuracy << ','
      << to_string(r.deviation_accuracy) << ',' << r.total_positions << ','
      << r.total_answers;
  return out.str();
}

ordered_json to_json(const VerificationVerdict& verdict) {
  ordered_json j;
  j["accepted"] = verdict.accepted;
  ordered_json checks = ordered_json::array();
  for (const Check& c : verdict.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["result"] = c.passed ? "pass" : "fail";
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

namespace {

ordered_json ring_json(const Ring& r) {
  ordered_json j;
  j["sequence"] = format_answer(r);
  j["length"] = r.length;
  return j;
}

}  // namespace

ordered_json to_json(const PerturbationReport& r) {
  ordered_json j;
  j["perturbed_edge"] = {r.edge_u, r.edge_v};
  j["old_edge_length"] = r.old_edge_length;
  j["new_edge_length"] = r.new_edge_length;
  j["relative_change"] = to_string(r.relative_change);
  j["old_exact"] = ring_json(r.old_exact);
  j["new_exact"] = ring_json(r.new_exact);
  j["old_optimum_new_position"] = r.old_optimum_new_position;
  j["new_optimum_old_position"] = r.new_optimum_old_position;
  j["sequence_changed"] = r.sequence_changed;
  j["edge_overlap"] = r.edge_overlap;
  j["old_group_count"] = r.old_group_count;
  j["new_group_count"] = r.new_group_count;
  j["ring_count"] = r.ring_count;
  return j;
}

ordered_json to_json(const HeuristicOutcome& outcome) {
  ordered_json j;
  j["producer"] = outcome.producer;
  std::visit(
      [&j](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Ring>) j["kind"] = "ring";
        else if constexpr (std::is_same_v<T, PathAnswer>) j["kind"] = "path";
        else j["kind"] = "subset";
        j["sequence"] = format_answer(a);
        j["objective"] = a.objective();
      },
      outcome.answer);
  return j;
}

ordered_json to_json(const HeuristicFailure& failure) {
  ordered_json j;
  j["producer"] = failure.producer;
  j["reason"] = failure.reason;
  j["partial"] = format_sequence(failure.partial);
  return j;
}

}  // namespace answerrank
