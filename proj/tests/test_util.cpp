#include "test_util.hpp"

#include <deque>
#include <numeric>

namespace buchi::testing {

ExplicitGBA make_gba(std::uint32_t n, std::uint32_t k, std::uint32_t init,
                     const std::vector<Edge>& edges,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& acc) {
  ExplicitGBA g;
  g.init = init;
  g.conditions = k;
  g.succ.resize(n);
  g.acc.resize(n);
  for (const Edge& e : edges)
    g.succ[e.from].push_back(e.to);
  for (auto [s, j] : acc)
    g.acc[s].insert(j);
  g.validate();
  return g;
}

std::vector<std::vector<std::uint8_t>> closure(const ExplicitGBA& g) {
  const std::uint32_t n = g.state_count();
  std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
  for (std::uint32_t s = 0; s < n; ++s) {
    std::deque<std::uint32_t> queue{s};
    reach[s][s] = 1;
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::uint32_t t : g.succ[x])
        if (!reach[s][t]) {
          reach[s][t] = 1;
          queue.push_back(t);
        }
    }
  }
  return reach;
}

std::vector<std::uint8_t> reachable(const ExplicitGBA& g) {
  std::vector<std::uint8_t> seen(g.state_count(), 0);
  std::deque<std::uint32_t> queue{g.init};
  seen[g.init] = 1;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t t : g.succ[x])
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
  }
  return seen;
}

std::size_t reachable_count(const ExplicitGBA& g) {
  auto seen = reachable(g);
  return std::accumulate(seen.begin(), seen.end(), std::size_t{0});
}

}  // namespace buchi::testing
