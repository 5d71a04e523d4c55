#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "answerrank/types.hpp"

namespace answerrank {

// The ranking skeleton of an answer set: one entry per distinct objective
// value, best first. Group i (0-based) has dense rating position i + 1.
class Ranking {
 public:
  Ranking() = default;
  Ranking(Direction direction, std::vector<Objective> group_values,
          std::size_t total_answers, BigInt possible_count)
      : direction_(direction),
        group_values_(std::move(group_values)),
        total_answers_(total_answers),
        possible_count_(std::move(possible_count)) {}

  Direction direction() const { return direction_; }
  std::size_t group_count() const { return group_values_.size(); }
  std::span<const Objective> group_values() const { return group_values_; }
  Objective group_value(std::size_t i) const { return group_values_.at(i); }
  std::size_t total_answers() const { return total_answers_; }
  bool empty() const { return total_answers_ == 0; }
  // Size of the space of formally possible answers.
  const BigInt& possible_count() const { return possible_count_; }

  // 0-based group index holding `value`, or group_count() when absent.
  std::size_t find_group(Objective value) const {
    auto it = std::lower_bound(
        group_values_.begin(), group_values_.end(), value,
        [this](Objective a, Objective b) { return better(direction_, a, b); });
    if (it == group_values_.end() || *it != value) return group_values_.size();
    return static_cast<std::size_t>(it - group_values_.begin());
  }

 private:
  Direction direction_ = Direction::minimize;
  std::vector<Objective> group_values_;
  std::size_t total_answers_ = 0;
  BigInt possible_count_ = 0;
};

// Complete ordered set of allowable answers for one instance. Answers are
// sorted best-first by objective, then ascending by their own ordering, so
// equal inputs always produce identical sets.
template <class Answer>
class AnswerSet {
 public:
  AnswerSet() = default;

  AnswerSet(Direction direction, std::vector<Answer> answers,
            BigInt possible_count)
      : answers_(std::move(answers)) {
    std::sort(answers_.begin(), answers_.end(),
              [direction](const Answer& a, const Answer& b) {
                const Objective va = a.objective();
                const Objective vb = b.objective();
                if (va != vb) return better(direction, va, vb);
                return a < b;
              });
    starts_.clear();
    std::vector<Objective> values;
    for (std::size_t i = 0; i < answers_.size(); ++i) {
      if (i == 0 || answers_[i].objective() != answers_[i - 1].objective()) {
        values.push_back(answers_[i].objective());
        starts_.push_back(i);
      }
    }
    starts_.push_back(answers_.size());
    ranking_ = Ranking(direction, std::move(values), answers_.size(),
                       std::move(possible_count));
  }

  const Ranking& ranking() const { return ranking_; }
  operator const Ranking&() const { return ranking_; }

  Direction direction() const { return ranking_.direction(); }
  std::size_t group_count() const { return ranking_.group_count(); }
  Objective group_value(std::size_t i) const { return ranking_.group_value(i); }
  std::size_t total_answers() const { return answers_.size(); }
  bool empty() const { return answers_.empty(); }
  const BigInt& possible_count() const { return ranking_.possible_count(); }

  std::span<const Answer> group(std::size_t i) const {
    return std::span<const Answer>(answers_).subspan(
        starts_.at(i), starts_.at(i + 1) - starts_.at(i));
  }
  std::span<const Answer> answers() const { return answers_; }

  // 1-based dense rating position of the answer at flat index `i`.
  std::size_t position_of_index(std::size_t i) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), i);
    return static_cast<std::size_t>(it - starts_.begin());
  }

  bool operator==(const AnswerSet& other) const {
    return answers_ == other.answers_ && direction() == other.direction() &&
           possible_count() == other.possible_count();
  }

 private:
  std::vector<Answer> answers_;
  std::vector<std::size_t> starts_{0};
  Ranking ranking_;
};

}  // namespace answerrank
