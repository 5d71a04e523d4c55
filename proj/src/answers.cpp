#include "answerrank/answers.hpp"

namespace answerrank {

std::string format_sequence(const std::vector<NodeId>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(nodes[i]);
  }
  return out;
}

std::string format_answer(const Ring& ring) { return format_sequence(ring.sequence); }

std::string format_answer(const PathAnswer& path) { return format_sequence(path.sequence); }

std::string format_answer(const SubsetAnswer& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.chosen.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(subset.chosen[i] + 1);
  }
  return out;
}

std::string format_answer(const Assignment& assignment) {
  std::string out;
  out.reserve(assignment.values.size());
  for (bool v : assignment.values) out += v ? 'T' : 'F';
  return out;
}

}  // namespace answerrank
