#include <set>

#include "answerrank/generate.hpp"
#include "answerrank/oracle.hpp"
#include "answerrank/random.hpp"
#include "answerrank/verification.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace answerrank;
using namespace answerrank::testing;

namespace {

const WeightedGraph kTriangle = make_graph(3, {{1, 2, 5}, {2, 3, 4}, {1, 3, 3}});

bool passed(const VerificationVerdict& v, const char* name) {
  const Check* c = v.find(name);
  REQUIRE(c != nullptr);
  return c->passed;
}

// All 2n rotations and reflections of each ring.
std::set<std::vector<NodeId>> expand_routes(const AnswerSet<Ring>& rings) {
  std::set<std::vector<NodeId>> routes;
  for (const Ring& r : rings.answers()) {
    std::vector<NodeId> s = r.sequence;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        routes.insert(s);
        std::rotate(s.begin(), s.begin() + 1, s.end());
      }
      std::reverse(s.begin(), s.end());
    }
  }
  return routes;
}

}  // namespace

TEST_CASE("ring claims on a triangle") {
  const std::vector<NodeId> good{1, 2, 3};
  const auto ok = verify_ring_claim(kTriangle, good, 12);
  CHECK(ok.accepted);
  CHECK(ok.checks.size() == 4);
  CHECK(ok.checks[0].name == "closes");
  CHECK(ok.checks[3].name == "length_matches");

  const auto wrong_length = verify_ring_claim(kTriangle, good, 11);
  CHECK_FALSE(wrong_length.accepted);
  CHECK_FALSE(passed(wrong_length, ring_checks::length_matches));
  CHECK(passed(wrong_length, ring_checks::edges_exist));
  CHECK(wrong_length.find(ring_checks::length_matches)->detail.find("12") != std::string::npos);

  const std::vector<NodeId> repeat{1, 2, 2};
  const auto rep = verify_ring_claim(kTriangle, repeat, 9);
  CHECK_FALSE(rep.accepted);
  CHECK_FALSE(passed(rep, ring_checks::node_coverage));

  const std::vector<NodeId> rotated{3, 1, 2};
  CHECK(verify_ring_claim(kTriangle, rotated, 12).accepted);

  const std::vector<NodeId> outside{1, 2, 9};
  CHECK_FALSE(passed(verify_ring_claim(kTriangle, outside, 0), ring_checks::node_coverage));

  const std::vector<NodeId> empty;
  const auto none = verify_ring_claim(kTriangle, empty, 0);
  CHECK_FALSE(none.accepted);
  CHECK(none.checks.size() == 4);
}

TEST_CASE("missing edges are named") {
  const auto g = make_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 4, 1}});
  const std::vector<NodeId> diagonal{1, 3, 2, 4};
  const auto v = verify_ring_claim(g, diagonal, 4);
  CHECK_FALSE(passed(v, ring_checks::edges_exist));
  CHECK(v.find(ring_checks::edges_exist)->detail == "missing edge (1, 3)");
  CHECK_FALSE(passed(v, ring_checks::length_matches));
  CHECK(passed(v, ring_checks::node_coverage));
}

TEST_CASE("accepted claims are exactly the enumerated routes") {
  // Every sequence in {1..n}^n, claimed at its true length when defined.
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto inst = generate_tsp(n, 0.4 + 0.15 * static_cast<double>(seed), {1, 50}, seed);
      const auto routes = expand_routes(enumerate_rings(inst));
      std::size_t accepted = 0;
      std::vector<NodeId> seq(n, 1);
      while (true) {
        Length claim = 0;
        bool has_length = true;
        for (std::size_t i = 0; i < n; ++i) {
          const auto l = inst.graph.edge_length(seq[i], seq[(i + 1) % n]);
          if (!l) has_length = false;
          else claim += *l;
        }
        const bool ok = verify_ring_claim(inst.graph, seq, has_length ? claim : 0).accepted;
        CHECK(ok == routes.contains(seq));
        accepted += ok;
        std::size_t i = 0;
        while (i < n && seq[i] == n) seq[i++] = 1;
        if (i == n) break;
        ++seq[i];
      }
      CHECK(accepted == routes.size());
      CHECK(accepted == 2 * n * enumerate_rings(inst).answers().size());
    }
  }
}

TEST_CASE("fuzzed ring claims never throw") {
  const auto inst = generate_tsp(7, 0.6, {1, 100}, 5);
  Rng rng(2024);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    std::vector<NodeId> seq(rng.below(12));
    for (NodeId& u : seq) u = static_cast<NodeId>(rng.below(11));
    const Length claim = static_cast<Length>(rng.next() >> (rng.below(64)));
    const auto v = verify_ring_claim(inst.graph, seq, trial % 3 == 0 ? -claim : claim);
    CHECK(v.checks.size() == 4);
    accepted += v.accepted;
  }
  CHECK(accepted == 0);
}

TEST_CASE("path claims") {
  const PathInstance inst{kTriangle, 1, 3};
  const std::vector<NodeId> direct{1, 3};
  const std::vector<NodeId> around{1, 2, 3};
  const std::vector<NodeId> backwards{3, 1};
  const std::vector<NodeId> loop{1, 2, 1, 3};
  CHECK(verify_path_claim(inst, direct, 3).accepted);
  CHECK(verify_path_claim(inst, around, 9).accepted);
  CHECK_FALSE(verify_path_claim(inst, around, 3).accepted);
  CHECK_FALSE(passed(verify_path_claim(inst, backwards, 3), "endpoints"));
  CHECK_FALSE(passed(verify_path_claim(inst, loop, 13), "distinct_nodes"));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = generate_path(7, 0.5, {0, 30}, seed);
    const auto paths = enumerate_paths(p);
    for (const auto& a : paths.answers()) {
      CHECK(verify_path_claim(p, a.sequence, a.length).accepted);
    }
  }
}

TEST_CASE("assignments") {
  // (x1 or x2) and (not x1 or not x2)
  const CnfFormula xor2{2, {{1, 2}, {-1, -2}}};
  CHECK(verify_assignment(xor2, {true, false}).accepted);
  CHECK(verify_assignment(xor2, {false, true}).accepted);
  const auto tt = verify_assignment(xor2, {true, true});
  CHECK_FALSE(tt.accepted);
  CHECK(passed(tt, "clause_1"));
  CHECK_FALSE(passed(tt, "clause_2"));
  CHECK_THROWS_AS(verify_assignment(xor2, {true}), InstanceError);

  // Acceptance is exactness: the accepted set is the enumerated set and it
  // forms a single rank group.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t k = 1 + seed % 12;
    const auto f = generate_cnf(k, 0, std::min<std::size_t>(3, k), seed);
    const auto set = enumerate_assignments(f);
    std::set<std::vector<bool>> accepted;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<bool> a(k);
      for (std::size_t v = 0; v < k; ++v) a[v] = (mask >> v) & 1;
      if (verify_assignment(f, a).accepted) accepted.insert(a);
    }
    std::set<std::vector<bool>> enumerated;
    for (const auto& a : set.answers()) enumerated.insert(a.values);
    CHECK(enumerated == accepted);
    const auto models = truth_table_models(f);
    CHECK(enumerated == std::set<std::vector<bool>>(models.begin(), models.end()));
    if (!set.empty()) CHECK(set.group_count() == 1);
  }
}
