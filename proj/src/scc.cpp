#include "buchi/scc.hpp"

#include <algorithm>

#include "buchi/errors.hpp"

namespace buchi {

// Iterative Tarjan over the reachable part, explicit frames instead of
// recursion so deep graphs cannot overflow the call stack.
std::vector<Scc> scc_decompose(const ExplicitGBA& g) {
  const std::uint32_t n = g.state_count();
  std::vector<std::uint32_t> num(n, 0), low(n, 0);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<Scc> out;
  std::uint32_t count = 0;

  struct Frame {
    std::uint32_t state;
    std::size_t next = 0;
  };
  std::vector<Frame> frames;

  auto open = [&](std::uint32_t s) {
    num[s] = low[s] = ++count;
    on_stack[s] = 1;
    stack.push_back(s);
    frames.push_back({s});
  };

  open(g.init);
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto& succs = g.succ[f.state];
    if (f.next < succs.size()) {
      std::uint32_t t = succs[f.next++];
      if (num[t] == 0)
        open(t);
      else if (on_stack[t])
        low[f.state] = std::min(low[f.state], num[t]);
    } else {
      std::uint32_t s = f.state;
      if (low[s] == num[s]) {
        Scc scc;
        std::uint32_t u;
        do {
          u = stack.back();
          stack.pop_back();
          on_stack[u] = 0;
          scc.states.push_back(u);
          scc.acc |= g.acc[u];
        } while (u != s);
        std::reverse(scc.states.begin(), scc.states.end());
        if (scc.states.size() > 1) {
          scc.nontrivial = true;
        } else {
          const auto& only = g.succ[scc.states[0]];
          scc.nontrivial = std::find(only.begin(), only.end(), scc.states[0]) != only.end();
        }
        out.push_back(std::move(scc));
      }
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().state] = std::min(low[frames.back().state], low[s]);
    }
  }
  return out;
}

bool is_weak(const ExplicitGBA& g) {
  if (g.conditions != 1)
    throw ContractError("weakness is defined for plain BAs (k = 1), got k = " +
                        std::to_string(g.conditions));
  for (const Scc& c : scc_decompose(g)) {
    std::size_t accepting = 0;
    for (std::uint32_t s : c.states)
      if (g.acc[s].contains(1))
        ++accepting;
    if (accepting != 0 && accepting != c.states.size())
      return false;
  }
  return true;
}

}  // namespace buchi
