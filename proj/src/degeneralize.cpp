#include "buchi/degeneralize.hpp"

namespace buchi {

ExplicitGBA degeneralize(const ExplicitGBA& g) {
  const std::uint32_t n = g.state_count();
  const std::uint32_t k = g.conditions;

  ExplicitGBA out;
  out.conditions = 1;

  if (k == 0) {
    out.init = g.init;
    out.succ = g.succ;
    out.acc.resize(n);
    for (std::uint32_t s = 0; s < n; ++s)
      out.acc[s].insert(1);
    return out;
  }

  out.init = degeneralized_index(g.init, 1, k);
  out.succ.resize(static_cast<std::size_t>(n) * k);
  out.acc.resize(static_cast<std::size_t>(n) * k);
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t i = 1; i <= k; ++i) {
      std::uint32_t from = degeneralized_index(s, i, k);
      std::uint32_t j = g.acc[s].contains(i) ? (i % k) + 1 : i;
      auto& list = out.succ[from];
      list.reserve(g.succ[s].size());
      for (std::uint32_t t : g.succ[s])
        list.push_back(degeneralized_index(t, j, k));
    }
    if (g.acc[s].contains(k))
      out.acc[degeneralized_index(s, k, k)].insert(1);
  }
  return out;
}

}  // namespace buchi
