#include "buchi/explicit_gba.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "text_format.hpp"

namespace buchi {

void ExplicitGBA::validate() const {
  const std::uint32_t n = state_count();
  if (n == 0)
    throw ContractError("automaton has no states");
  if (conditions > AcceptanceSet::kMaxConditions)
    throw ContractError("too many acceptance conditions");
  if (init >= n)
    throw ContractError("initial state out of range");
  if (acc.size() != succ.size())
    throw ContractError("acceptance table size mismatch");
  for (std::uint32_t s = 0; s < n; ++s) {
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t t : succ[s]) {
      if (t >= n)
        throw ContractError("edge target out of range");
      if (!seen.insert(t).second)
        throw ContractError("duplicate edge " + std::to_string(s) + " -> " + std::to_string(t));
    }
    if (conditions < 64 && (acc[s].bits() >> conditions) != 0)
      throw ContractError("acceptance index beyond k on state " + std::to_string(s));
  }
}

ExplicitGBA parse_gba(std::istream& in) {
  auto lines = detail::tokenize(in);
  if (lines.empty())
    throw ParseError("empty automaton file", 1);
  const auto& head = lines.front();
  if (head.tokens[0] != "gba")
    throw ParseError("expected 'gba <n> <k>' header, got '" + head.tokens[0] + "'", head.number);
  detail::expect_tokens(head, 3);
  auto n = detail::parse_number(head, 1, "state count");
  auto k = detail::parse_number(head, 2, "condition count");
  if (n == 0)
    throw ParseError("automaton needs at least one state", head.number);
  if (k > AcceptanceSet::kMaxConditions)
    throw ParseError("at most 64 acceptance conditions are supported", head.number);

  ExplicitGBA g;
  g.conditions = static_cast<std::uint32_t>(k);
  g.succ.resize(n);
  g.acc.resize(n);
  bool saw_init = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& kw = line.tokens[0];
    if (kw == "init") {
      detail::expect_tokens(line, 2);
      if (saw_init)
        throw ParseError("duplicate init line", line.number);
      g.init = detail::parse_state(line, 1, static_cast<std::uint32_t>(n), "initial state");
      saw_init = true;
    } else if (kw == "acc") {
      detail::expect_tokens(line, 3);
      auto s = detail::parse_state(line, 1, static_cast<std::uint32_t>(n), "state");
      auto j = detail::parse_number(line, 2, "condition index");
      if (j == 0 || j > k)
        throw ParseError("condition index " + std::to_string(j) + " out of 1.." + std::to_string(k),
                         line.number);
      g.acc[s].insert(static_cast<std::uint32_t>(j));
    } else if (kw == "edge") {
      detail::expect_tokens(line, 3);
      auto u = detail::parse_state(line, 1, static_cast<std::uint32_t>(n), "edge source");
      auto v = detail::parse_state(line, 2, static_cast<std::uint32_t>(n), "edge target");
      if (std::find(g.succ[u].begin(), g.succ[u].end(), v) != g.succ[u].end())
        throw ParseError("duplicate edge " + std::to_string(u) + " -> " + std::to_string(v), line.number);
      g.succ[u].push_back(v);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line.number);
    }
  }
  g.validate();
  return g;
}

ExplicitGBA load_gba(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open automaton file: " + path);
  return parse_gba(in);
}

void write_gba(std::ostream& out, const ExplicitGBA& g) {
  out << "gba " << g.state_count() << ' ' << g.conditions << '\n';
  out << "init " << g.init << '\n';
  for (std::uint32_t s = 0; s < g.state_count(); ++s)
    for (std::uint32_t j = 1; j <= g.conditions; ++j)
      if (g.acc[s].contains(j))
        out << "acc " << s << ' ' << j << '\n';
  for (std::uint32_t s = 0; s < g.state_count(); ++s)
    for (std::uint32_t t : g.succ[s])
      out << "edge " << s << ' ' << t << '\n';
}

std::string to_text(const ExplicitGBA& g) {
  std::ostringstream out;
  write_gba(out, g);
  return out.str();
}

}  // namespace buchi
