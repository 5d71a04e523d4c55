#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace answerrank {

// Nodes are labeled 1..n everywhere.
using NodeId = std::uint32_t;
using Length = std::int64_t;
using Objective = std::int64_t;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

enum class Direction { minimize, maximize };

inline const char* to_string(Direction d) {
  return d == Direction::minimize ? "minimize" : "maximize";
}

// True when objective `a` is strictly better than `b` under `d`.
inline bool better(Direction d, Objective a, Objective b) {
  return d == Direction::minimize ? a < b : a > b;
}

// Thrown when a configured enumeration limit would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, std::uint64_t limit, std::uint64_t requested)
      : std::runtime_error("cap " + cap + " exceeded: limit " +
                           std::to_string(limit) + ", requested " +
                           std::to_string(requested)),
        cap_(std::move(cap)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap() const { return cap_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t requested() const { return requested_; }

 private:
  std::string cap_;
  std::uint64_t limit_;
  std::uint64_t requested_;
};

std::string to_string(const Rational& r);

}  // namespace answerrank
