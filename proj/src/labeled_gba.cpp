#include "buchi/labeled_gba.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "text_format.hpp"

namespace buchi {

void LabeledGBA::validate() const {
  graph.validate();
  if (guards.size() != graph.succ.size())
    throw ContractError("guard table size mismatch");
  for (std::uint32_t s = 0; s < graph.state_count(); ++s)
    if (guards[s].size() != graph.succ[s].size())
      throw ContractError("each edge needs exactly one guard (state " + std::to_string(s) + ")");
}

LabeledGBA parse_labeled_gba(std::istream& in) {
  auto lines = detail::tokenize(in);
  if (lines.empty())
    throw ParseError("empty automaton file", 1);
  const auto& head = lines.front();
  if (head.tokens[0] != "gba")
    throw ParseError("expected 'gba <n> <k>' header, got '" + head.tokens[0] + "'", head.number);
  detail::expect_tokens(head, 3);
  auto n = static_cast<std::uint32_t>(detail::parse_number(head, 1, "state count"));
  auto k = detail::parse_number(head, 2, "condition count");
  if (n == 0)
    throw ParseError("automaton needs at least one state", head.number);
  if (k > AcceptanceSet::kMaxConditions)
    throw ParseError("at most 64 acceptance conditions are supported", head.number);

  LabeledGBA a;
  a.graph.conditions = static_cast<std::uint32_t>(k);
  a.graph.succ.resize(n);
  a.graph.acc.resize(n);
  a.guards.resize(n);
  bool saw_init = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& kw = line.tokens[0];
    if (kw == "init") {
      detail::expect_tokens(line, 2);
      if (saw_init)
        throw ParseError("duplicate init line", line.number);
      a.graph.init = detail::parse_state(line, 1, n, "initial state");
      saw_init = true;
    } else if (kw == "acc") {
      detail::expect_tokens(line, 3);
      auto s = detail::parse_state(line, 1, n, "state");
      auto j = detail::parse_number(line, 2, "condition index");
      if (j == 0 || j > k)
        throw ParseError("condition index out of 1.." + std::to_string(k), line.number);
      a.graph.acc[s].insert(static_cast<std::uint32_t>(j));
    } else if (kw == "edge") {
      if (line.tokens.size() != 3 && line.tokens.size() != 4)
        throw ParseError("expected 'edge <u> <v> [guard]'", line.number);
      auto u = detail::parse_state(line, 1, n, "edge source");
      auto v = detail::parse_state(line, 2, n, "edge target");
      if (std::find(a.graph.succ[u].begin(), a.graph.succ[u].end(), v) != a.graph.succ[u].end())
        throw ParseError("duplicate edge", line.number);
      Guard guard = Guard::constant(true);
      if (line.tokens.size() == 4) {
        try {
          guard = parse_guard(line.tokens[3]);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line.number);
        }
      }
      a.graph.succ[u].push_back(v);
      a.guards[u].push_back(std::move(guard));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line.number);
    }
  }
  a.validate();
  return a;
}

LabeledGBA load_labeled_gba(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open automaton file: " + path);
  return parse_labeled_gba(in);
}

void write_labeled_gba(std::ostream& out, const LabeledGBA& a) {
  const auto& g = a.graph;
  out << "gba " << g.state_count() << ' ' << g.conditions << '\n';
  out << "init " << g.init << '\n';
  for (std::uint32_t s = 0; s < g.state_count(); ++s)
    for (std::uint32_t j = 1; j <= g.conditions; ++j)
      if (g.acc[s].contains(j))
        out << "acc " << s << ' ' << j << '\n';
  for (std::uint32_t s = 0; s < g.state_count(); ++s) {
    for (std::size_t i = 0; i < g.succ[s].size(); ++i) {
      std::string text = a.guards[s][i].to_string();
      out << "edge " << s << ' ' << g.succ[s][i] << ' ';
      if (text.find(' ') != std::string::npos)
        out << '"' << text << '"';
      else
        out << text;
      out << '\n';
    }
  }
}

}  // namespace buchi
