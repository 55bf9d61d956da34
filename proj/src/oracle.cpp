#include "buchi/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "buchi/errors.hpp"
#include "buchi/scc.hpp"

namespace buchi {

namespace {

// Shortest path u -> v over g, >= 1 edge when min_one_edge, optionally
// restricted to a state set. Returns the full state sequence, empty if none.
std::vector<std::uint32_t> bfs_path(const ExplicitGBA& g, std::uint32_t from,
                                    const std::vector<std::uint8_t>* allowed,
                                    const std::function<bool(std::uint32_t)>& goal,
                                    bool min_one_edge) {
  if (!min_one_edge && goal(from))
    return {from};
  std::vector<std::int64_t> parent(g.state_count(), -1);
  parent[from] = from;
  std::deque<std::uint32_t> queue{from};
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t t : g.succ[x]) {
      if (allowed && !(*allowed)[t])
        continue;
      if (goal(t)) {
        std::vector<std::uint32_t> rev{t};
        std::uint32_t cur = x;
        while (true) {
          rev.push_back(cur);
          if (cur == from)
            break;
          cur = static_cast<std::uint32_t>(parent[cur]);
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
      }
      if (parent[t] < 0) {
        parent[t] = x;
        queue.push_back(t);
      }
    }
  }
  return {};
}

}  // namespace

Verdict oracle_emptiness(const ExplicitGBA& g) {
  const AcceptanceSet full = AcceptanceSet::all(g.conditions);
  for (const Scc& c : scc_decompose(g)) {
    if (!c.nontrivial)
      continue;
    if ((c.acc.bits() & full.bits()) != full.bits())
      continue;

    std::vector<std::uint8_t> members(g.state_count(), 0);
    for (std::uint32_t s : c.states)
      members[s] = 1;

    // Prefix: nearest entry point of the witnessing SCC.
    auto prefix_path =
        bfs_path(g, g.init, nullptr, [&](std::uint32_t x) { return members[x] != 0; }, false);
    if (prefix_path.empty())
      throw InvariantViolation("reachable SCC not reachable by BFS");
    std::uint32_t anchor = prefix_path.back();

    // Loop: cover the still-missing conditions one search at a time, then
    // close the cycle back to the anchor.
    std::vector<std::uint32_t> walk{anchor};
    AcceptanceSet covered = g.acc[anchor];
    while ((covered.bits() & full.bits()) != full.bits()) {
      auto leg = bfs_path(
          g, walk.back(), &members,
          [&](std::uint32_t x) { return (g.acc[x].bits() & full.bits() & ~covered.bits()) != 0; },
          true);
      if (leg.empty())
        throw InvariantViolation("acceptance witness unreachable inside SCC");
      for (std::size_t i = 1; i < leg.size(); ++i) {
        covered |= g.acc[leg[i]];
        walk.push_back(leg[i]);
      }
    }
    auto back = bfs_path(g, walk.back(), &members,
                         [&](std::uint32_t x) { return x == anchor; }, true);
    if (back.empty())
      throw InvariantViolation("cannot close cycle inside SCC");
    for (std::size_t i = 1; i < back.size(); ++i)
      walk.push_back(back[i]);

    Lasso lasso;
    for (std::uint32_t s : prefix_path)
      lasso.prefix.push_back(StateDescriptor::of_state(s));
    for (std::size_t i = 1; i < walk.size(); ++i)
      lasso.loop.push_back(StateDescriptor::of_state(walk[i]));
    return Verdict::counterexample(std::move(lasso));
  }
  return Verdict::empty();
}

bool validate_lasso(AutomatonProvider& p, const Verdict& v) {
  const Lasso* lasso = v.lasso();
  if (!lasso)
    throw ContractError("validate_lasso needs a counterexample verdict");
  const auto& prefix = lasso->prefix;
  const auto& loop = lasso->loop;
  if (prefix.empty() || loop.empty())
    return false;
  if (!(prefix.front() == p.initial()))
    return false;

  auto has_edge = [&](const StateDescriptor& a, const StateDescriptor& b) {
    auto succs = p.post(a);
    return std::find(succs.begin(), succs.end(), b) != succs.end();
  };

  for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
    if (!has_edge(prefix[i], prefix[i + 1]))
      return false;
  if (!has_edge(prefix.back(), loop.front()))
    return false;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i)
    if (!has_edge(loop[i], loop[i + 1]))
      return false;
  if (!has_edge(loop.back(), loop.front()))
    return false;

  AcceptanceSet covered;
  for (const auto& s : loop)
    covered |= p.acceptance(s);
  const AcceptanceSet full = AcceptanceSet::all(p.conditions());
  return (covered.bits() & full.bits()) == full.bits();
}

}  // namespace buchi
