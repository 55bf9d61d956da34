#include "buchi/kripke.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include "text_format.hpp"

namespace buchi {

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty())
    return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

void KripkeStructure::validate() const {
  const std::uint32_t n = state_count();
  if (n == 0)
    throw ContractError("kripke structure has no states");
  if (init >= n)
    throw ContractError("initial state out of range");
  if (labels.size() != succ.size())
    throw ContractError("label table size mismatch");
  for (std::uint32_t s = 0; s < n; ++s) {
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t t : succ[s]) {
      if (t >= n)
        throw ContractError("edge target out of range");
      if (!seen.insert(t).second)
        throw ContractError("duplicate edge " + std::to_string(s) + " -> " + std::to_string(t));
    }
    for (const std::string& p : labels[s])
      if (!valid_ident(p))
        throw ContractError("invalid proposition name '" + p + "'");
    if (!std::is_sorted(labels[s].begin(), labels[s].end()))
      throw ContractError("labels must be sorted");
  }
}

KripkeStructure parse_kripke(std::istream& in) {
  auto lines = detail::tokenize(in);
  if (lines.empty())
    throw ParseError("empty kripke file", 1);
  const auto& head = lines.front();
  if (head.tokens[0] != "kripke")
    throw ParseError("expected 'kripke <n>' header, got '" + head.tokens[0] + "'", head.number);
  detail::expect_tokens(head, 2);
  auto n = static_cast<std::uint32_t>(detail::parse_number(head, 1, "state count"));
  if (n == 0)
    throw ParseError("kripke structure needs at least one state", head.number);

  KripkeStructure m;
  m.succ.resize(n);
  m.labels.resize(n);
  bool saw_init = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& kw = line.tokens[0];
    if (kw == "init") {
      detail::expect_tokens(line, 2);
      if (saw_init)
        throw ParseError("duplicate init line", line.number);
      m.init = detail::parse_state(line, 1, n, "initial state");
      saw_init = true;
    } else if (kw == "label") {
      if (line.tokens.size() < 2)
        throw ParseError("label line needs a state", line.number);
      auto s = detail::parse_state(line, 1, n, "state");
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        if (!valid_ident(line.tokens[i]))
          throw ParseError("invalid proposition name '" + line.tokens[i] + "'", line.number);
        m.labels[s].push_back(line.tokens[i]);
      }
      m.labels[s] = make_prop_set(std::move(m.labels[s]));
    } else if (kw == "edge") {
      detail::expect_tokens(line, 3);
      auto u = detail::parse_state(line, 1, n, "edge source");
      auto v = detail::parse_state(line, 2, n, "edge target");
      if (std::find(m.succ[u].begin(), m.succ[u].end(), v) != m.succ[u].end())
        throw ParseError("duplicate edge", line.number);
      m.succ[u].push_back(v);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line.number);
    }
  }
  m.validate();
  return m;
}

KripkeStructure load_kripke(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open kripke file: " + path);
  return parse_kripke(in);
}

void write_kripke(std::ostream& out, const KripkeStructure& m) {
  out << "kripke " << m.state_count() << '\n';
  out << "init " << m.init << '\n';
  for (std::uint32_t s = 0; s < m.state_count(); ++s) {
    if (!m.labels[s].empty()) {
      out << "label " << s;
      for (const auto& p : m.labels[s])
        out << ' ' << p;
      out << '\n';
    }
  }
  for (std::uint32_t s = 0; s < m.state_count(); ++s)
    for (std::uint32_t t : m.succ[s])
      out << "edge " << s << ' ' << t << '\n';
}

}  // namespace buchi
