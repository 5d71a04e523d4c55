#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "answerrank/instances.hpp"

namespace answerrank {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

class Reader {
 public:
  explicit Reader(std::size_t line) : line_(line) {}

  template <class Int>
  Int number(std::string_view word, std::string_view what) const {
    Int value{};
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      fail("expected integer " + std::string(what) + ", got '" + std::string(word) + "'");
    }
    return value;
  }

  void arity(const std::vector<std::string_view>& words, std::size_t expected) const {
    if (words.size() != expected) {
      fail("'" + std::string(words[0]) + "' expects " + std::to_string(expected - 1) +
           " argument(s), got " + std::to_string(words.size() - 1));
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, "syntax", message);
  }

 private:
  std::size_t line_;
};

struct Line {
  std::size_t number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto words = split_words(line);
    if (!words.empty()) lines.push_back({number, std::move(words)});
    pos = end + 1;
  }
  return lines;
}

template <class Fn>
auto with_line(std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const InstanceError& e) {
    throw ParseError(line, e.rule(), e.what());
  }
}

Instance parse_graph_task(const std::vector<Line>& lines, bool is_path) {
  const Line& head = lines.front();
  Reader r(head.number);
  r.arity(head.words, is_path ? 4 : 2);
  const auto n = r.number<std::size_t>(head.words[1], "node count");
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    Reader lr(l.number);
    if (l.words[0] != "edge") lr.fail("unexpected directive '" + std::string(l.words[0]) + "'");
    lr.arity(l.words, 4);
    const auto u = lr.number<NodeId>(l.words[1], "node");
    const auto v = lr.number<NodeId>(l.words[2], "node");
    const auto len = lr.number<Length>(l.words[3], "length");
    if (u == v) throw ParseError(l.number, "self_loop", "self-loop at node " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError(l.number, "node_out_of_range",
                       "edge endpoint outside 1.." + std::to_string(n));
    }
    if (len < 0) throw ParseError(l.number, "negative_length", "edge length must be >= 0");
    const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) {
      throw ParseError(l.number, "duplicate_edge",
                       "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    edges.push_back({u, v, len});
  }
  auto graph = with_line(head.number, [&] { return WeightedGraph(n, std::move(edges)); });
  if (!is_path) return TspInstance{std::move(graph)};
  PathInstance p{std::move(graph), r.number<NodeId>(head.words[2], "source"),
                 r.number<NodeId>(head.words[3], "target")};
  with_line(head.number, [&] { validate(p); return 0; });
  return p;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "syntax", "empty instance document");
  const Line& head = lines.front();
  const std::string_view kind = head.words[0];
  Reader r(head.number);

  if (kind == "tsp") return parse_graph_task(lines, false);
  if (kind == "path") return parse_graph_task(lines, true);

  if (kind == "knapsack") {
    r.arity(head.words, 2);
    KnapsackInstance k;
    k.capacity = r.number<std::int64_t>(head.words[1], "capacity");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      Reader lr(lines[i].number);
      if (lines[i].words[0] != "item") {
        lr.fail("unexpected directive '" + std::string(lines[i].words[0]) + "'");
      }
      lr.arity(lines[i].words, 3);
      k.items.push_back({lr.number<std::int64_t>(lines[i].words[1], "weight"),
                         lr.number<std::int64_t>(lines[i].words[2], "value")});
      if (k.items.back().weight <= 0 || k.items.back().value <= 0) {
        throw ParseError(lines[i].number, "nonpositive_item",
                         "item weight and value must be positive");
      }
    }
    with_line(head.number, [&] { validate(k); return 0; });
    return k;
  }

  if (kind == "partition") {
    r.arity(head.words, 1);
    PartitionInstance p;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      Reader lr(lines[i].number);
      if (lines[i].words[0] != "number") {
        lr.fail("unexpected directive '" + std::string(lines[i].words[0]) + "'");
      }
      lr.arity(lines[i].words, 2);
      p.numbers.push_back(lr.number<std::int64_t>(lines[i].words[1], "number"));
      if (p.numbers.back() <= 0) {
        throw ParseError(lines[i].number, "nonpositive_number", "numbers must be positive");
      }
    }
    with_line(head.number, [&] { validate(p); return 0; });
    return p;
  }

  if (kind == "cnf") {
    r.arity(head.words, 2);
    CnfFormula f;
    f.variable_count = r.number<std::size_t>(head.words[1], "variable count");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& l = lines[i];
      Reader lr(l.number);
      if (l.words[0] != "clause") lr.fail("unexpected directive '" + std::string(l.words[0]) + "'");
      std::vector<Literal> clause;
      for (std::size_t w = 1; w < l.words.size(); ++w) {
        clause.push_back(lr.number<Literal>(l.words[w], "literal"));
      }
      if (clause.empty()) throw ParseError(l.number, "empty_clause", "clause has no literals");
      for (Literal lit : clause) {
        if (lit == 0) throw ParseError(l.number, "zero_literal", "literal 0 is not allowed");
        const auto var = static_cast<std::size_t>(std::abs(static_cast<std::int64_t>(lit)));
        if (var > f.variable_count) {
          throw ParseError(l.number, "literal_out_of_range",
                           "variable " + std::to_string(var) + " exceeds " +
                               std::to_string(f.variable_count));
        }
      }
      f.clauses.push_back(std::move(clause));
    }
    with_line(head.number, [&] { validate(f); return 0; });
    return f;
  }

  throw ParseError(head.number, "unknown_task", "unknown task kind '" + std::string(kind) + "'");
}

namespace {

void write_edges(std::ostringstream& out, const WeightedGraph& g) {
  for (const Edge& e : g.edges()) {
    out << "edge " << e.u << ' ' << e.v << ' ' << e.length << '\n';
  }
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TspInstance>) {
          out << "tsp " << x.graph.node_count() << '\n';
          write_edges(out, x.graph);
        } else if constexpr (std::is_same_v<T, PathInstance>) {
          out << "path " << x.graph.node_count() << ' ' << x.source << ' ' << x.target << '\n';
          write_edges(out, x.graph);
        } else if constexpr (std::is_same_v<T, KnapsackInstance>) {
          out << "knapsack " << x.capacity << '\n';
          for (const auto& item : x.items) out << "item " << item.weight << ' ' << item.value << '\n';
        } else if constexpr (std::is_same_v<T, PartitionInstance>) {
          out << "partition\n";
          for (auto k : x.numbers) out << "number " << k << '\n';
        } else {
          out << "cnf " << x.variable_count << '\n';
          for (const auto& clause : x.clauses) {
            out << "clause";
            for (Literal lit : clause) out << ' ' << lit;
            out << '\n';
          }
        }
      },
      instance);
  return out.str();
}

}  // namespace answerrank
