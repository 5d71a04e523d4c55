#include <set>

#include "answerrank/generate.hpp"
#include "answerrank/heuristics.hpp"
#include "answerrank/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace answerrank;
using namespace answerrank::testing;

namespace {

const WeightedGraph kTriangle = make_graph(3, {{1, 2, 5}, {2, 3, 4}, {1, 3, 3}});

template <class Answer>
void check_group_structure(const AnswerSet<Answer>& set) {
  for (std::size_t g = 0; g < set.group_count(); ++g) {
    if (g > 0) CHECK(better(set.direction(), set.group_value(g - 1), set.group_value(g)));
    for (const Answer& a : set.group(g)) CHECK(a.objective() == set.group_value(g));
  }
}

}  // namespace

TEST_CASE("canonical_ring") {
  const std::vector<NodeId> rotated{2, 3, 1};
  const std::vector<NodeId> reflected{1, 3, 2};
  CHECK(canonical_ring(rotated, kTriangle).sequence == std::vector<NodeId>{1, 2, 3});
  CHECK(canonical_ring(reflected, kTriangle).sequence == std::vector<NodeId>{1, 2, 3});
  CHECK(canonical_ring(reflected, kTriangle).length == 12);

  const std::vector<NodeId> square{1, 2, 4, 3};
  CHECK(canonical_ring(square, complete_graph(4)).length == 4);
  CHECK(canonical_ring(std::vector<NodeId>{4, 2, 1, 3}, complete_graph(4)).sequence ==
        std::vector<NodeId>{1, 2, 4, 3});

  auto rule_of = [](std::vector<NodeId> seq, const WeightedGraph& g) {
    try {
      canonical_ring(seq, g);
    } catch (const InstanceError& e) {
      return e.rule();
    }
    return std::string("none");
  };
  const auto path_graph = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
  CHECK(rule_of({1, 2, 3}, path_graph) == "missing_edge");
  CHECK(rule_of({1, 2, 2}, kTriangle) == "repeated_node");
  CHECK(rule_of({1, 2}, kTriangle) == "wrong_node_count");
  CHECK(rule_of({1, 2, 7}, kTriangle) == "node_out_of_range");
}

TEST_CASE("ring counts on small graphs") {
  CHECK(enumerate_rings(TspInstance{complete_graph(4)}).total_answers() == 3);
  CHECK(enumerate_rings(TspInstance{complete_graph(5)}).total_answers() == 12);
  CHECK(enumerate_rings(TspInstance{kTriangle}).total_answers() == 1);

  const auto none = enumerate_rings(TspInstance{bridged_triangles()});
  CHECK(none.empty());
  CHECK(none.group_count() == 0);
  CHECK(none.possible_count() == 46656);  // 6^6
}

TEST_CASE("ring-count law on complete graphs") {
  std::size_t expected = 3;  // (4-1)!/2
  for (std::size_t n = 4; n <= 10; ++n) {
    const auto set = enumerate_rings(TspInstance{generate_graph(n, 1.0, {1, 50}, n)});
    CHECK(set.total_answers() == expected);
    CHECK(route_count(set, n) == BigInt(2 * n) * expected);
    expected *= n;
  }
}

TEST_CASE("a frozen sparse twelve-node ring count") {
  // Frozen from an independent directed-cycle count (4436 directed cycles
  // through node 1, halved for direction).
  const TspInstance inst{generate_graph(12, 0.6, {900000, 1200000}, 1)};
  const auto set = enumerate_rings(inst);
  CHECK(set.total_answers() == 2218);
  CHECK(set.total_answers() == serial::enumerate_rings(inst).total_answers());
}

TEST_CASE("route_count") {
  CHECK(route_count(Ranking(Direction::minimize, {1}, 6237, 0), 12) == 149'688);
  CHECK(route_count(Ranking(Direction::minimize, {4}, 3, 0), 4) == 24);
  CHECK(route_count(Ranking(), 5) == 0);
  CHECK_THROWS(route_count(Ranking(), 2));
}

TEST_CASE("possible_answer_count") {
  CHECK(possible_answer_count(3) == 27);
  CHECK(possible_answer_count(12) == BigInt("8916100448256"));
  CHECK(possible_answer_count(1) == 1);
  CHECK(possible_answer_count(16) == BigInt("18446744073709551616"));  // past 64 bits
}

TEST_CASE("canonical forms of all permutations match the enumeration") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 3 + seed % 5;  // 3..7
    const double density = seed % 3 == 0 ? 1.0 : 0.6;
    const auto g = generate_graph(n, density, {1, 20}, seed);

    std::set<Ring> via_canonical;
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{1});
    do {
      try {
        via_canonical.insert(canonical_ring(perm, g));
      } catch (const InstanceError&) {
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    const auto set = enumerate_rings(TspInstance{g});
    const std::set<Ring> enumerated(set.answers().begin(), set.answers().end());
    CHECK(enumerated.size() == set.total_answers());
    CHECK(enumerated == via_canonical);

    const auto brute = brute_rings(g);
    REQUIRE(brute.size() == set.total_answers());
    for (const auto& b : brute) {
      CHECK(enumerated.count(Ring{b.sequence, b.length}) == 1);
    }
  }
}

TEST_CASE("group ordering and answer objectives") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    check_group_structure(enumerate_rings(generate_tsp(8, 0.7, {1, 30}, seed)));
    check_group_structure(enumerate_paths(generate_path(8, 0.5, {1, 30}, seed)));
    check_group_structure(enumerate_knapsack(generate_knapsack(10, {1, 20}, seed)));
    check_group_structure(enumerate_partition(generate_partition(10, {1, 20}, seed)));
  }
}

TEST_CASE("parallel kernels match the serial reference for any worker count") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto tsp = generate_tsp(9, 0.75, {1, 40}, seed);
    const auto cnf = generate_cnf(12, 30, 3, seed);
    const auto knap = generate_knapsack(12, {1, 30}, seed);
    const auto part = generate_partition(12, {1, 30}, seed);
    const auto ref_rings = serial::enumerate_rings(tsp);
    const auto ref_models = serial::enumerate_assignments(cnf);
    const auto ref_knap = serial::enumerate_knapsack(knap);
    const auto ref_part = serial::enumerate_partition(part);
    for (int threads : {1, 2, 3, 8}) {
      const EnumerationOptions opts{Caps{}, threads};
      CHECK(enumerate_rings(tsp, opts) == ref_rings);
      CHECK(enumerate_assignments(cnf, opts) == ref_models);
      CHECK(enumerate_knapsack(knap, opts) == ref_knap);
      CHECK(enumerate_partition(part, opts) == ref_part);
    }
  }
}

TEST_CASE("enumerate_paths") {
  SUBCASE("triangle") {
    const auto set = enumerate_paths(PathInstance{kTriangle, 1, 3});
    REQUIRE(set.total_answers() == 2);
    REQUIRE(set.group_count() == 2);
    CHECK(set.group_value(0) == 3);
    CHECK(set.group(0)[0].sequence == std::vector<NodeId>{1, 3});
    CHECK(set.group_value(1) == 9);
    CHECK(set.group(1)[0].sequence == std::vector<NodeId>{1, 2, 3});
  }
  SUBCASE("unreachable target") {
    const auto g = make_graph(4, {{1, 2, 1}, {3, 4, 1}});
    CHECK(enumerate_paths(PathInstance{g, 1, 4}).empty());
  }
  SUBCASE("best value equals the shortest distance") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto inst = generate_path(8, 0.3 + 0.005 * static_cast<double>(seed), {0, 50}, seed);
      const auto set = enumerate_paths(inst);
      const auto expected = shortest_distance(inst);
      REQUIRE(set.empty() == !expected.has_value());
      if (expected) CHECK(set.group_value(0) == *expected);
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(enumerate_paths(generate_path(13, 0.5, {1, 2}, 0)), CapExceeded);
  }
}

TEST_CASE("enumerate_knapsack") {
  SUBCASE("nothing fits") {
    const auto set = enumerate_knapsack(KnapsackInstance{{{2, 3}}, 1});
    REQUIRE(set.total_answers() == 1);
    CHECK(set.group_value(0) == 0);
    CHECK(set.group(0)[0].chosen.empty());
  }
  SUBCASE("ties share a position") {
    const auto set = enumerate_knapsack(KnapsackInstance{{{1, 1}, {1, 1}}, 2});
    REQUIRE(set.group_count() == 3);
    CHECK(set.group_value(0) == 2);
    CHECK(set.group(0).size() == 1);
    CHECK(set.group_value(1) == 1);
    CHECK(set.group(1).size() == 2);
    CHECK(set.group_value(2) == 0);
    CHECK(set.position_of_index(1) == 2);
    CHECK(set.position_of_index(2) == 2);
    CHECK(set.position_of_index(3) == 3);
  }
  SUBCASE("optimum equals the dynamic program") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto k = generate_knapsack(12, {1, 40}, seed);
      const auto set = enumerate_knapsack(k);
      CHECK(set.group_value(0) == knapsack_dp(k));
      for (const auto& s : set.answers()) CHECK(s.weight <= k.capacity);
    }
  }
}

TEST_CASE("enumerate_partition") {
  CHECK(enumerate_partition(PartitionInstance{{1, 1}}).group_value(0) == 0);
  const auto single = enumerate_partition(PartitionInstance{{3}});
  REQUIRE(single.total_answers() == 1);
  CHECK(single.group_value(0) == 3);

  const auto seven = enumerate_partition(PartitionInstance{{1, 2, 3, 4, 5, 6, 7}});
  CHECK(seven.total_answers() == 64);
  CHECK(seven.group_value(0) == 0);
  for (const auto& s : seven.group(0)) CHECK(s.weight == 14);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = generate_partition(13, {1, 60}, seed);
    const auto set = enumerate_partition(p);
    CHECK(set.group_value(0) == partition_dp(p));
    for (const auto& s : set.answers()) CHECK(s.chosen.front() == 0);
  }
}

TEST_CASE("enumerate_assignments") {
  SUBCASE("xor") {
    const CnfFormula xor_formula{2, {{1, 2}, {-1, -2}}};
    const auto set = enumerate_assignments(xor_formula);
    REQUIRE(set.total_answers() == 2);
    CHECK(set.group_count() == 1);
    CHECK(set.answers()[0].values == std::vector<bool>{false, true});
    CHECK(set.answers()[1].values == std::vector<bool>{true, false});
  }
  SUBCASE("contradiction") {
    const auto set = enumerate_assignments(CnfFormula{1, {{1}, {-1}}});
    CHECK(set.empty());
    CHECK(set.group_count() == 0);
  }
  SUBCASE("matches the truth table") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto f = generate_cnf(10, 20 + seed, 3, seed);
      const auto set = enumerate_assignments(f);
      const auto models = truth_table_models(f);
      REQUIRE(set.total_answers() == models.size());
      CHECK(set.group_count() <= 1);
      for (std::size_t i = 0; i < models.size(); ++i) CHECK(set.answers()[i].values == models[i]);
    }
  }
  SUBCASE("cap") {
    Caps caps;
    caps.max_sat_variables = 8;
    CHECK_THROWS_AS(enumerate_assignments(generate_cnf(9, 5, 3, 0), {caps, 0}), CapExceeded);
  }
}

TEST_CASE("held_karp") {
  const auto k4 = held_karp(TspInstance{complete_graph(4)});
  REQUIRE(k4.has_value());
  CHECK(k4->length == 4);
  CHECK_FALSE(held_karp(TspInstance{bridged_triangles()}).has_value());
  CHECK(held_karp(TspInstance{kTriangle})->length == 12);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 9 + seed % 3;
    const auto inst = generate_tsp(n, 0.45 + 0.01 * static_cast<double>(seed), {1, 1000}, seed);
    const auto set = enumerate_rings(inst);
    const auto hk = held_karp(inst);
    REQUIRE(hk.has_value() == !set.empty());
    if (hk) {
      CHECK(hk->length == set.group_value(0));
      CHECK(canonical_ring(hk->sequence, inst.graph) == *hk);
    }
  }

  Caps caps;
  caps.max_held_karp_nodes = 5;
  CHECK_THROWS_AS(held_karp(TspInstance{complete_graph(6)}, caps), CapExceeded);
}

TEST_CASE("ring cap") {
  CHECK_THROWS_AS(enumerate_rings(TspInstance{complete_graph(14)}), CapExceeded);
  Caps caps;
  caps.max_ring_nodes = 5;
  try {
    enumerate_rings(TspInstance{complete_graph(6)}, {caps, 0});
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == "max_ring_nodes");
    CHECK(e.limit() == 5);
    CHECK(e.requested() == 6);
  }
}

TEST_CASE("deterministic output") {
  const auto inst = generate_tsp(9, 0.8, {1, 5}, 3);  // many ties
  const auto a = enumerate_rings(inst, {Caps{}, 1});
  const auto b = enumerate_rings(inst, {Caps{}, 4});
  CHECK(a == b);
  for (std::size_t g = 0; g < a.group_count(); ++g) {
    CHECK(std::is_sorted(a.group(g).begin(), a.group(g).end()));
  }
}
