#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string_view>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "answerrank/generate.hpp"
#include "answerrank/heuristics.hpp"
#include "answerrank/metrics.hpp"
#include "answerrank/oracle.hpp"
#include "answerrank/report_io.hpp"
#include "answerrank/sensitivity.hpp"
#include "answerrank/verification.hpp"

#ifndef ANSWERRANK_VERSION
#define ANSWERRANK_VERSION "0.0.0"
#endif

namespace answerrank::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Carries an exit code out of a command body.
struct CommandError {
  int code;
  std::string message;
};

[[noreturn]] void input_error(const std::string& message) {
  throw CommandError{kInputError, message};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &size, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < size; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return "sha256:" + hex.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) input_error("cannot write '" + path + "'");
  file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Splits "a<sep>b" into two integers.
template <class Int>
std::pair<Int, Int> parse_pair(const std::string& text, std::string_view sep, const char* flag) {
  const auto at = text.find(sep);
  if (at == std::string::npos) {
    input_error(std::string(flag) + " expects a" + std::string(sep) + "b, got '" + text + "'");
  }
  auto number = [&](std::string_view part) {
    Int value{};
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      input_error(std::string(flag) + ": '" + std::string(part) + "' is not an integer");
    }
    return value;
  };
  const std::string_view view(text);
  return {number(view.substr(0, at)), number(view.substr(at + sep.size()))};
}

struct Manifest {
  std::string command_line;
  std::string instance_digest;
  std::vector<std::uint64_t> seeds;
  Caps caps;
  std::vector<std::pair<std::string, double>> timings_ms;

  void time(const std::string& phase, Clock::time_point since) {
    timings_ms.emplace_back(
        phase, std::chrono::duration<double, std::milli>(Clock::now() - since).count());
  }

  // The body embedded in results; no wall-clock data.
  ordered_json body() const {
    ordered_json j;
    j["command"] = command_line;
    j["tool_version"] = ANSWERRANK_VERSION;
    j["instance_digest"] = instance_digest.empty() ? ordered_json(nullptr)
                                                   : ordered_json(instance_digest);
    j["seeds"] = seeds;
    ordered_json caps_json;
    caps_json["max_ring_nodes"] = caps.max_ring_nodes;
    caps_json["max_held_karp_nodes"] = caps.max_held_karp_nodes;
    caps_json["max_sat_variables"] = caps.max_sat_variables;
    caps_json["max_path_nodes"] = caps.max_path_nodes;
    caps_json["max_subset_items"] = caps.max_subset_items;
    j["caps"] = std::move(caps_json);
    return j;
  }

  ordered_json full() const {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["manifest"] = body();
    ordered_json timing = ordered_json::object();
    for (const auto& [phase, ms] : timings_ms) timing[phase] = ms;
    j["timing_ms"] = std::move(timing);
    return j;
  }
};

ordered_json result_document(const Manifest& manifest) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["manifest"] = manifest.body();
  return j;
}

struct LoadedInstance {
  Instance instance;
  std::string digest;
};

LoadedInstance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return {parse_instance(text), sha256_hex(text)};
  } catch (const ParseError& e) {
    input_error(path + ": " + e.what() + " [" + e.rule() + "]");
  }
}

// Calls fn(answer_set) with the oracle's answer set for `instance`.
template <class Fn>
auto with_answer_set(const Instance& instance, const EnumerationOptions& options, Fn&& fn) {
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TspInstance>) return fn(enumerate_rings(x, options));
        else if constexpr (std::is_same_v<T, PathInstance>) return fn(enumerate_paths(x, options));
        else if constexpr (std::is_same_v<T, KnapsackInstance>) return fn(enumerate_knapsack(x, options));
        else if constexpr (std::is_same_v<T, PartitionInstance>) return fn(enumerate_partition(x, options));
        else return fn(enumerate_assignments(x, options));
      },
      instance);
}

const std::vector<std::string> kHeuristics = {
    std::string(heuristic_names::nearest_neighbor), std::string(heuristic_names::greedy_edge),
    std::string(heuristic_names::two_opt),          std::string(heuristic_names::random),
    std::string(heuristic_names::dijkstra),         std::string(heuristic_names::greedy_knapsack),
    std::string(heuristic_names::greedy_partition)};

std::string_view heuristic_task(std::string_view name) {
  if (name == heuristic_names::dijkstra) return "path";
  if (name == heuristic_names::greedy_knapsack) return "knapsack";
  if (name == heuristic_names::greedy_partition) return "partition";
  return "tsp";
}

HeuristicResult run_heuristic(std::string_view name, const Instance& instance, NodeId start,
                              std::uint64_t seed) {
  if (heuristic_task(name) != task_name(instance)) {
    input_error("heuristic '" + std::string(name) + "' does not apply to a " +
                std::string(task_name(instance)) + " instance");
  }
  if (const auto* tsp = std::get_if<TspInstance>(&instance)) {
    if (name == heuristic_names::nearest_neighbor) return nearest_neighbor(*tsp, start);
    if (name == heuristic_names::greedy_edge) return greedy_edge(*tsp);
    if (name == heuristic_names::random) return random_allowable_ring(*tsp, seed);
    // two-opt starts from the nearest-neighbor ring, or a random ring when
    // the walk dead-ends.
    HeuristicResult seed_ring = nearest_neighbor(*tsp, start);
    if (!succeeded(seed_ring)) seed_ring = random_allowable_ring(*tsp, seed);
    if (!succeeded(seed_ring)) {
      auto failure = std::get<HeuristicFailure>(seed_ring);
      failure.producer = std::string(heuristic_names::two_opt);
      return failure;
    }
    return two_opt(*tsp, std::get<Ring>(std::get<HeuristicOutcome>(seed_ring).answer));
  }
  if (const auto* path = std::get_if<PathInstance>(&instance)) return dijkstra(*path);
  if (const auto* k = std::get_if<KnapsackInstance>(&instance)) return greedy_knapsack(*k);
  return greedy_partition(std::get<PartitionInstance>(instance));
}

ordered_json verify_outcome(const Instance& instance, const HeuristicOutcome& outcome) {
  if (const auto* ring = std::get_if<Ring>(&outcome.answer)) {
    return to_json(verify_ring_claim(std::get<TspInstance>(instance).graph, ring->sequence,
                                     ring->length));
  }
  if (const auto* path = std::get_if<PathAnswer>(&outcome.answer)) {
    return to_json(verify_path_claim(std::get<PathInstance>(instance), path->sequence,
                                     path->length));
  }
  return nullptr;
}

std::string join_command(const std::vector<std::string>& args) {
  std::string line;
  for (const auto& a : args) {
    if (!line.empty()) line += ' ';
    line += a;
  }
  return line;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string task;
  std::size_t n = 0;
  double density = 1.0;
  std::string weights = "1:100";
  std::uint64_t seed = 0;
  std::size_t clauses = 0;
  std::size_t width = 3;
  std::string out;
};

Instance generate(const GenOptions& o) {
  const auto [lo, hi] = parse_pair<std::int64_t>(o.weights, ":", "--weights");
  const WeightRange w{lo, hi};
  try {
    if (o.task == "tsp") return generate_tsp(o.n, o.density, w, o.seed);
    if (o.task == "path") return generate_path(o.n, o.density, w, o.seed);
    if (o.task == "knapsack") return generate_knapsack(o.n, w, o.seed);
    if (o.task == "partition") return generate_partition(o.n, w, o.seed);
    return generate_cnf(o.n, o.clauses, o.width, o.seed);
  } catch (const InstanceError& e) {
    input_error(std::string("gen: ") + e.what());
  }
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const std::string doc = serialize_instance(generate(o));
  if (o.out.empty()) {
    out << doc;
  } else {
    write_text(o.out, doc, out);
    out << sha256_hex(doc) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- rank

struct RankOptions {
  std::string instance;
  std::string csv;
  std::string summary;
  std::string manifest;
  int threads = 0;
};

template <class Answer>
ordered_json group_json(const AnswerSet<Answer>& set, std::size_t g) {
  ordered_json j;
  j["rating_position"] = g + 1;
  j["objective"] = set.group_value(g);
  j["answers"] = set.group(g).size();
  j["first"] = format_answer(set.group(g).front());
  return j;
}

int cmd_rank(const RankOptions& o, Manifest& manifest, std::ostream& out) {
  auto t0 = Clock::now();
  const auto loaded = load_instance(o.instance);
  manifest.instance_digest = loaded.digest;
  manifest.time("parse", t0);

  EnumerationOptions options{manifest.caps, o.threads};
  ordered_json summary = result_document(manifest);
  summary["task"] = task_name(loaded.instance);
  std::ostringstream csv;
  t0 = Clock::now();
  with_answer_set(loaded.instance, options, [&](const auto& set) {
    summary["direction"] = to_string(set.direction());
    summary["total_answers"] = set.total_answers();
    summary["total_positions"] = set.group_count();
    if (const auto* tsp = std::get_if<TspInstance>(&loaded.instance)) {
      const std::size_t n = tsp->graph.node_count();
      summary["route_count"] = n >= 3 ? route_count(set, n).str() : std::string("0");
      summary["warnings"] = validation_warnings(*tsp);
    }
    summary["possible_answer_count"] = set.possible_count().str();
    summary["best"] = set.empty() ? ordered_json(nullptr) : group_json(set, 0);
    summary["worst"] = set.empty() ? ordered_json(nullptr) : group_json(set, set.group_count() - 1);
    write_answer_csv(csv, set);
    return 0;
  });
  manifest.time("enumerate", t0);

  write_text(o.csv, csv.str(), out);
  if (!o.summary.empty()) {
    write_text(o.summary, dump(summary), out);
  } else if (!o.csv.empty()) {
    out << dump(summary);
  }
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  std::string instance;
  std::string heuristic;
  NodeId start = 1;
  std::uint64_t seed = 0;
  bool grade = false;
  std::string out;
  std::string manifest;
  int threads = 0;
};

int cmd_solve(const SolveOptions& o, Manifest& manifest, std::ostream& out) {
  auto t0 = Clock::now();
  const auto loaded = load_instance(o.instance);
  manifest.instance_digest = loaded.digest;
  manifest.seeds = {o.seed};
  manifest.time("parse", t0);

  t0 = Clock::now();
  const HeuristicResult result = run_heuristic(o.heuristic, loaded.instance, o.start, o.seed);
  manifest.time("heuristic", t0);

  ordered_json doc = result_document(manifest);
  doc["task"] = task_name(loaded.instance);
  doc["heuristic"] = o.heuristic;
  if (const auto* failure = std::get_if<HeuristicFailure>(&result)) {
    doc["status"] = "failed";
    doc["failure"] = to_json(*failure);
    write_text(o.out, dump(doc), out);
    return kHeuristicFailed;
  }
  const auto& outcome = std::get<HeuristicOutcome>(result);
  doc["status"] = "ok";
  doc["outcome"] = to_json(outcome);
  doc["verification"] = verify_outcome(loaded.instance, outcome);
  if (o.grade) {
    t0 = Clock::now();
    EnumerationOptions options{manifest.caps, o.threads};
    doc["report"] = with_answer_set(loaded.instance, options, [&](const auto& set) {
      return to_json(build_report(set, outcome));
    });
    manifest.time("grade", t0);
  }
  write_text(o.out, dump(doc), out);
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string instance;
  std::string claim;
  std::string out;
  std::string manifest;
};

struct Claim {
  std::string kind;
  std::string sequence;
  std::optional<Length> claimed;
};

Claim parse_claim(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string word; words >> word;) w.push_back(word);
    if (w.empty()) continue;
    if (w[0] != "claim" || w.size() < 3) input_error("claim: expected 'claim <kind> <sequence> [objective]'");
    Claim c{w[1], w[2], std::nullopt};
    if (c.kind == "ring" || c.kind == "path") {
      if (w.size() != 4) input_error("claim: " + c.kind + " claims need a claimed length");
      Length value{};
      auto [ptr, ec] = std::from_chars(w[3].data(), w[3].data() + w[3].size(), value);
      if (ec != std::errc() || ptr != w[3].data() + w[3].size()) {
        input_error("claim: '" + w[3] + "' is not an integer length");
      }
      c.claimed = value;
    } else if (c.kind == "assignment") {
      if (w.size() != 3) input_error("claim: assignment claims take no objective");
    } else {
      input_error("claim: unknown claim kind '" + c.kind + "'");
    }
    return c;
  }
  input_error("claim: no claim line found");
}

std::vector<NodeId> parse_nodes(const std::string& text) {
  std::vector<NodeId> nodes;
  std::string_view rest(text);
  for (;;) {
    const auto dash = rest.find('-');
    const std::string_view part = rest.substr(0, dash);
    NodeId value{};
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      input_error("claim: '" + std::string(part) + "' is not a node id");
    }
    nodes.push_back(value);
    if (dash == std::string_view::npos) break;
    rest.remove_prefix(dash + 1);
  }
  return nodes;
}

int cmd_verify(const VerifyOptions& o, Manifest& manifest, std::ostream& out) {
  const auto loaded = load_instance(o.instance);
  manifest.instance_digest = loaded.digest;
  const Claim claim = parse_claim(read_file(o.claim));

  VerificationVerdict verdict;
  if (claim.kind == "ring") {
    const auto* tsp = std::get_if<TspInstance>(&loaded.instance);
    if (!tsp) input_error("verify: ring claim needs a tsp instance");
    verdict = verify_ring_claim(tsp->graph, parse_nodes(claim.sequence), *claim.claimed);
  } else if (claim.kind == "path") {
    const auto* path = std::get_if<PathInstance>(&loaded.instance);
    if (!path) input_error("verify: path claim needs a path instance");
    verdict = verify_path_claim(*path, parse_nodes(claim.sequence), *claim.claimed);
  } else {
    const auto* cnf = std::get_if<CnfFormula>(&loaded.instance);
    if (!cnf) input_error("verify: assignment claim needs a cnf instance");
    std::vector<bool> values;
    for (char c : claim.sequence) {
      if (c != 'T' && c != 'F') input_error("claim: assignments are strings of T and F");
      values.push_back(c == 'T');
    }
    if (values.size() != cnf->variable_count) {
      input_error("claim: assignment has " + std::to_string(values.size()) +
                  " values, formula has " + std::to_string(cnf->variable_count));
    }
    verdict = verify_assignment(*cnf, values);
  }

  ordered_json doc = result_document(manifest);
  ordered_json claim_json;
  claim_json["kind"] = claim.kind;
  claim_json["sequence"] = claim.sequence;
  claim_json["claimed"] = claim.claimed ? ordered_json(*claim.claimed) : ordered_json(nullptr);
  doc["claim"] = std::move(claim_json);
  doc["verdict"] = to_json(verdict);
  write_text(o.out, dump(doc), out);
  return verdict.accepted ? kOk : kRejected;
}

// ---------------------------------------------------------------- perturb

struct PerturbOptions {
  std::string instance;
  std::string edge;
  std::string scale;
  std::string out;
  std::string csv;
  std::string manifest;
  int threads = 0;
};

int cmd_perturb(const PerturbOptions& o, Manifest& manifest, std::ostream& out) {
  auto t0 = Clock::now();
  const auto loaded = load_instance(o.instance);
  manifest.instance_digest = loaded.digest;
  const auto* tsp = std::get_if<TspInstance>(&loaded.instance);
  if (!tsp) input_error("perturb: needs a tsp instance");
  const auto [u, v] = parse_pair<NodeId>(o.edge, ":", "--edge");
  const auto [num, den] = parse_pair<std::int64_t>(o.scale, ":", "--scale");
  const PerturbationSpec spec{u, v, num, den};
  WeightedGraph after_graph;
  try {
    after_graph = apply_perturbation(tsp->graph, spec);
  } catch (const InstanceError& e) {
    input_error(std::string("perturb: ") + e.what());
  }
  manifest.time("parse", t0);

  t0 = Clock::now();
  const EnumerationOptions options{manifest.caps, o.threads};
  const auto before = enumerate_rings(*tsp, options);
  if (before.empty()) throw CommandError{kRingless, "perturb: the original instance has no ring"};
  const auto after = enumerate_rings(TspInstance{after_graph}, options);
  if (after.empty()) throw CommandError{kRingless, "perturb: the perturbed instance has no ring"};
  manifest.time("enumerate", t0);

  const auto report = profile_enumerations(tsp->graph, before, after_graph, after, spec);
  ordered_json doc = result_document(manifest);
  doc["report"] = to_json(report);
  write_text(o.out, dump(doc), out);

  if (!o.csv.empty()) {
    std::ostringstream csv;
    csv << "rating_position_before,sequence_before,objective_before,"
           "rating_position_after,sequence_after,objective_after\n";
    for (std::size_t i = 0; i < before.total_answers(); ++i) {
      const Ring& b = before.answers()[i];
      const Ring& a = after.answers()[i];
      csv << before.position_of_index(i) << ',' << format_answer(b) << ',' << b.length << ','
          << after.position_of_index(i) << ',' << format_answer(a) << ',' << a.length << '\n';
    }
    write_text(o.csv, csv.str(), out);
  }
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  std::string task = "tsp";
  std::string instance;
  std::size_t n = 0;
  double density = 1.0;
  std::string weights = "1:100";
  std::string seeds = "0..0";
  std::vector<std::string> heuristics;
  NodeId start = 1;
  std::string out;
  std::string manifest;
  int threads = 0;
};

int cmd_sweep(const SweepOptions& o, Manifest& manifest, std::ostream& out) {
  const auto [first, last] = parse_pair<std::uint64_t>(o.seeds, "..", "--seeds");
  if (first > last) input_error("--seeds: empty range");
  manifest.seeds = {first, last};

  std::optional<Instance> fixed;
  if (!o.instance.empty()) {
    auto loaded = load_instance(o.instance);
    manifest.instance_digest = loaded.digest;
    fixed = std::move(loaded.instance);
  } else if (o.n == 0) {
    input_error("sweep: give --instance or --n");
  }
  const std::string task = fixed ? std::string(task_name(*fixed)) : o.task;
  if (o.heuristics.empty()) input_error("sweep: --heuristics is required");
  for (const auto& h : o.heuristics) {
    if (heuristic_task(h) != task) {
      input_error("sweep: heuristic '" + h + "' does not apply to " + task);
    }
  }

  const EnumerationOptions options{manifest.caps, o.threads};
  std::ostringstream csv;
  csv << "seed,heuristic,status," << kReportCsvHeader << '\n';
  std::vector<std::size_t> hits(o.heuristics.size(), 0);
  std::vector<std::size_t> runs(o.heuristics.size(), 0);

  // Grading needs the ranking skeleton only; it is cached for a fixed instance.
  auto rank_of = [&](const Instance& instance) -> std::optional<Ranking> {
    try {
      return with_answer_set(instance, options, [](const auto& set) { return set.ranking(); });
    } catch (const CapExceeded&) {
      return std::nullopt;
    }
  };
  std::optional<Ranking> fixed_ranking;
  if (fixed) fixed_ranking = rank_of(*fixed);

  const auto t0 = Clock::now();
  for (std::uint64_t seed = first;; ++seed) {
    Instance instance = fixed ? *fixed
                              : generate(GenOptions{task, o.n, o.density, o.weights, seed, 0, 3, ""});
    const std::optional<Ranking> ranking = fixed ? fixed_ranking : rank_of(instance);
    for (std::size_t h = 0; h < o.heuristics.size(); ++h) {
      csv << seed << ',' << o.heuristics[h] << ',';
      if (!ranking) {
        csv << "cap_exceeded,,,,,,,,,\n";
        continue;
      }
      const auto result = run_heuristic(o.heuristics[h], instance, o.start, seed);
      if (!succeeded(result)) {
        ++runs[h];
        csv << "failed,,,,,,,,,\n";
        continue;
      }
      const auto report = build_report(*ranking, std::get<HeuristicOutcome>(result));
      ++runs[h];
      if (report.rating_position == 1) ++hits[h];
      csv << "ok," << to_csv_row(report) << '\n';
    }
    if (seed == last) break;
  }
  manifest.time("sweep", t0);

  for (std::size_t h = 0; h < o.heuristics.size(); ++h) {
    std::ostringstream freq;
    freq << std::fixed << std::setprecision(6)
         << (runs[h] ? static_cast<double>(hits[h]) / static_cast<double>(runs[h]) : 0.0);
    csv << "frequency," << o.heuristics[h] << ',' << hits[h] << '/' << runs[h] << ','
        << freq.str() << '\n';
  }
  write_text(o.out, csv.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive accuracy profiling of heuristic answers", "answerrank"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ANSWERRANK_VERSION);

  Manifest manifest;
  manifest.command_line = join_command(args);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance document");
  gen_cmd->add_option("--task", gen.task, "tsp|path|knapsack|partition|cnf")
      ->required()
      ->check(CLI::IsMember({"tsp", "path", "knapsack", "partition", "cnf"}));
  gen_cmd->add_option("--n", gen.n, "Nodes, items, numbers or variables")->required();
  gen_cmd->add_option("--density", gen.density, "Edge probability in (0, 1]");
  gen_cmd->add_option("--weights", gen.weights, "Inclusive range lo:hi");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--clauses", gen.clauses, "CNF clause count (default ceil(4.26 n))");
  gen_cmd->add_option("--width", gen.width, "CNF clause width");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "Enumerate and rank every allowable answer");
  rank_cmd->add_option("instance", rank.instance)->required();
  rank_cmd->add_option("--csv", rank.csv, "Ranked table (default stdout)");
  rank_cmd->add_option("--summary", rank.summary, "Summary JSON file");
  rank_cmd->add_option("--manifest", rank.manifest, "Run manifest with timings");
  rank_cmd->add_option("--threads", rank.threads);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a heuristic, optionally graded");
  solve_cmd->add_option("instance", solve.instance)->required();
  solve_cmd->add_option("--heuristic", solve.heuristic)->required()->check(CLI::IsMember(kHeuristics));
  solve_cmd->add_option("--start", solve.start, "Start node for nn / two-opt");
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_flag("--grade", solve.grade, "Compare against the exhaustive ranking");
  solve_cmd->add_option("--out", solve.out);
  solve_cmd->add_option("--manifest", solve.manifest);
  solve_cmd->add_option("--threads", solve.threads);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a claimed answer for allowability");
  verify_cmd->add_option("instance", verify.instance)->required();
  verify_cmd->add_option("claim", verify.claim)->required();
  verify_cmd->add_option("--out", verify.out);
  verify_cmd->add_option("--manifest", verify.manifest);

  PerturbOptions perturb;
  auto* perturb_cmd = app.add_subcommand("perturb", "Rescale one edge and compare rankings");
  perturb_cmd->add_option("instance", perturb.instance)->required();
  perturb_cmd->add_option("--edge", perturb.edge, "u:v")->required();
  perturb_cmd->add_option("--scale", perturb.scale, "num:den")->required();
  perturb_cmd->add_option("--out", perturb.out);
  perturb_cmd->add_option("--csv", perturb.csv, "Both ranked tables side by side");
  perturb_cmd->add_option("--manifest", perturb.manifest);
  perturb_cmd->add_option("--threads", perturb.threads);

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Grade heuristics over a seed range");
  sweep_cmd->add_option("--task", sweep.task)->check(
      CLI::IsMember({"tsp", "path", "knapsack", "partition"}));
  sweep_cmd->add_option("--instance", sweep.instance, "Fixed instance (seeds drive heuristics)");
  sweep_cmd->add_option("--n", sweep.n);
  sweep_cmd->add_option("--density", sweep.density);
  sweep_cmd->add_option("--weights", sweep.weights);
  sweep_cmd->add_option("--seeds", sweep.seeds, "Inclusive range a..b");
  sweep_cmd->add_option("--heuristics", sweep.heuristics)
      ->delimiter(',')
      ->check(CLI::IsMember(kHeuristics));
  sweep_cmd->add_option("--start", sweep.start);
  sweep_cmd->add_option("--out", sweep.out);
  sweep_cmd->add_option("--manifest", sweep.manifest);
  sweep_cmd->add_option("--threads", sweep.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code == 0 ? kOk : kInputError;
  }

  std::string manifest_path;
  try {
    manifest.caps = Caps::from_environment();
    int code = kOk;
    if (*gen_cmd) {
      if ((gen.task == "tsp" || gen.task == "path") && gen.n < 3) {
        err << "gen: --n must be at least 3 for graph tasks\n" << gen_cmd->help();
        return kInputError;
      }
      code = cmd_gen(gen, out);
    } else if (*rank_cmd) {
      manifest_path = rank.manifest;
      code = cmd_rank(rank, manifest, out);
    } else if (*solve_cmd) {
      manifest_path = solve.manifest;
      code = cmd_solve(solve, manifest, out);
    } else if (*verify_cmd) {
      manifest_path = verify.manifest;
      code = cmd_verify(verify, manifest, out);
    } else if (*perturb_cmd) {
      manifest_path = perturb.manifest;
      code = cmd_perturb(perturb, manifest, out);
    } else if (*sweep_cmd) {
      manifest_path = sweep.manifest;
      code = cmd_sweep(sweep, manifest, out);
    }
    if (!manifest_path.empty()) write_text(manifest_path, dump(manifest.full()), out);
    return code;
  } catch (const CommandError& e) {
    err << e.message << '\n';
    return e.code;
  } catch (const CapExceeded& e) {
    err << e.what() << '\n';
    return kCapExceeded;
  } catch (const RinglessInstance& e) {
    err << e.what() << '\n';
    return kRingless;
  } catch (const InstanceError& e) {
    err << e.what() << " [" << e.rule() << "]\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    // MetricError and friends mean the oracle and a heuristic disagree.
    err << "internal error: " << e.what() << '\n';
    return 70;
  }
}

}  // namespace answerrank::cli
