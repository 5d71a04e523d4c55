#include "answerrank/generate.hpp"
#include "answerrank/metrics.hpp"
#include "answerrank/oracle.hpp"
#include "answerrank/report_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace answerrank;
using namespace answerrank::testing;

namespace {

// Stand-in for a 12-node ring table: 6237 distinct lengths from
// the best ring 1 158 524 to the worst 1 166 122. Only the endpoints and the
// group count matter for the metrics.
Ranking twelve_node_table() {
  std::vector<Objective> values;
  for (Objective i = 0; i < 6236; ++i) values.push_back(1'158'524 + i);
  values.push_back(1'166'122);
  return Ranking(Direction::minimize, std::move(values), 6237, BigInt("8916100448256"));
}

}  // namespace

TEST_CASE("radial accuracy on 12-node lengths") {
  CHECK(radial_accuracy(1'166'122, 1'158'524) == 7598);
  CHECK(radial_accuracy(1'160'684, 1'158'524) == 2160);
  CHECK(radial_accuracy(5, 5) == 0);
  CHECK(radial_accuracy(3, 9) == 6);

  const auto rel = relative_radial_accuracy(1'166'122, 1'158'524);
  REQUIRE(rel.has_value());
  CHECK(*rel == Rational(7598, 1'158'524));
  CHECK(boost::rational_cast<double>(*rel) == doctest::Approx(0.006558).epsilon(1e-3));
  CHECK_FALSE(relative_radial_accuracy(4, 0).has_value());
}

TEST_CASE("worst ring of a 6237-position table") {
  const Ranking table = twelve_node_table();
  const auto worst = build_report(table, 1'166'122);
  CHECK(worst.rating_position == 6237);
  CHECK(worst.positional_accuracy == 6237);
  CHECK(worst.total_positions == 6237);
  CHECK(worst.deviation_accuracy == Rational(1));
  CHECK(worst.radial == 7598);

  const auto best = build_report(table, 1'158'524);
  CHECK(best.rating_position == 1);
  CHECK(best.deviation_accuracy == Rational(0));
  CHECK(best.radial == 0);
  CHECK(best.relative_radial == Rational(0));
}

TEST_CASE("dense positions under ties") {
  // Rings of lengths 10, 10, 12: the 12-ring is position 2, not 3.
  const Ranking r(Direction::minimize, {10, 12}, 3, BigInt(27));
  CHECK(rating_position(r, 10) == 1);
  CHECK(rating_position(r, 12) == 2);
  CHECK(deviation_accuracy(r, 12) == Rational(1));
  CHECK_THROWS_AS(rating_position(r, 11), MetricError);
  CHECK_THROWS_AS(build_report(Ranking(), 1), MetricError);

  const Ranking single(Direction::maximize, {1}, 4, BigInt(16));
  CHECK(deviation_accuracy(single, 1) == Rational(0));

  const Ranking maxim(Direction::maximize, {9, 7, 2}, 3, BigInt(8));
  CHECK(rating_position(maxim, 2) == 3);
  CHECK(build_report(maxim, 7).radial == 2);
}

TEST_CASE("positions agree with an independent dense ranking") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = generate_tsp(8, 0.8, {1, 20}, seed);
    const auto set = enumerate_rings(inst);
    std::vector<Objective> lengths;
    for (const auto& r : brute_rings(inst.graph)) lengths.push_back(r.length);
    for (Length l : lengths) CHECK(rating_position(set, l) == dense_rank(lengths, l));
  }
}

TEST_CASE("scaling leaves positions and multiplies radial accuracy") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = generate_tsp(8, 0.85, {1, 1000}, seed);
    const auto base = enumerate_rings(inst);
    if (base.empty()) continue;
    for (Length c : {2, 7, 1000}) {
      const auto scaled = enumerate_rings(TspInstance{scale_all_weights(inst.graph, c)});
      REQUIRE(scaled.answers().size() == base.answers().size());
      for (std::size_t i = 0; i < base.answers().size(); ++i) {
        const auto& a = base.answers()[i];
        const auto& b = scaled.answers()[i];
        CHECK(a.sequence == b.sequence);
        const auto ra = build_report(base, a.length);
        const auto rb = build_report(scaled, b.length);
        CHECK(ra.rating_position == rb.rating_position);
        CHECK(rb.radial == c * ra.radial);
        CHECK(rb.relative_radial == ra.relative_radial);
      }
    }
  }
}

TEST_CASE("report serialization") {
  const Ranking r(Direction::minimize, {10, 12, 15}, 4, BigInt(256));
  const auto report = build_report(r, 12);
  const auto j = to_json(report);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"objective", "exact", "radial", "relative_radial",
                                         "rating_position", "positional_accuracy",
                                         "deviation_accuracy", "total_positions",
                                         "total_answers"});
  CHECK(j["relative_radial"] == "1/5");
  CHECK(j["deviation_accuracy"] == "1/2");
  CHECK(to_csv_row(report) == "12,10,2,1/5,2,2,1/2,3,4");

  const Ranking zero(Direction::minimize, {0, 3}, 2, BigInt(8));
  CHECK(to_json(build_report(zero, 3))["relative_radial"].is_null());
  CHECK(to_csv_row(build_report(zero, 3)) == "3,0,3,,2,2,1/1,2,2");
}
