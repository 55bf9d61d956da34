#include "buchi/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "buchi/errors.hpp"
#include "buchi/scc.hpp"

namespace buchi {

void GenConfig::validate() const {
  if (states < 1)
    throw ContractError("generator needs at least one state");
  if (avg_out_degree < 0.0)
    throw ContractError("average out-degree must be non-negative");
  if (acc_density < 0.0 || acc_density > 1.0)
    throw ContractError("acceptance density must be within [0, 1]");
  if (conditions > AcceptanceSet::kMaxConditions)
    throw ContractError("too many acceptance conditions");
}

namespace {

// Geometric out-degree with the configured mean.
std::uint32_t sample_degree(std::mt19937_64& rng, double mean) {
  if (mean <= 0.0)
    return 0;
  std::geometric_distribution<std::uint32_t> dist(1.0 / (1.0 + mean));
  return dist(rng);
}

void add_edges(std::mt19937_64& rng, ExplicitGBA& g, double avg_out_degree) {
  const std::uint32_t n = g.state_count();
  std::uniform_int_distribution<std::uint32_t> target(0, n - 1);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::uint32_t degree = sample_degree(rng, avg_out_degree);
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < degree; ++i) {
      std::uint32_t t = target(rng);
      if (seen.insert(t).second)
        g.succ[s].push_back(t);
    }
  }
}

}  // namespace

ExplicitGBA random_gba(const GenConfig& c) {
  c.validate();
  std::mt19937_64 rng(c.seed);
  ExplicitGBA g;
  g.conditions = c.conditions;
  g.succ.resize(c.states);
  g.acc.resize(c.states);
  add_edges(rng, g, c.avg_out_degree);
  std::bernoulli_distribution accept(c.acc_density);
  for (std::uint32_t s = 0; s < c.states; ++s)
    for (std::uint32_t j = 1; j <= c.conditions; ++j)
      if (accept(rng))
        g.acc[s].insert(j);
  return g;
}

ExplicitGBA weak_random(const GenConfig& c) {
  c.validate();
  if (c.conditions != 1)
    throw ContractError("weak automata have a single acceptance condition");
  std::mt19937_64 rng(c.seed ^ 0x9e3779b97f4a7c15ull);
  ExplicitGBA g;
  g.conditions = 1;
  g.succ.resize(c.states);
  g.acc.resize(c.states);
  add_edges(rng, g, c.avg_out_degree);
  std::bernoulli_distribution accept(c.acc_density);
  for (const Scc& scc : scc_decompose(g)) {
    if (accept(rng))
      for (std::uint32_t s : scc.states)
        g.acc[s].insert(1);
  }
  return g;
}

ExplicitGBA gen_trivial_accepting(std::uint32_t n_sys, std::uint64_t seed, bool nonempty) {
  if (n_sys < 2)
    throw ContractError("trivial-accepting generator needs at least 2 system states");
  std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ull);
  const std::uint32_t n = nonempty ? n_sys + 1 : n_sys;
  ExplicitGBA g;
  g.conditions = 1;
  g.succ.resize(n);
  g.acc.resize(n);
  for (std::uint32_t s = 0; s < n; ++s)
    g.acc[s].insert(1);
  // DAG backbone: a spine plus random forward chords.
  for (std::uint32_t s = 0; s + 1 < n_sys; ++s)
    g.succ[s].push_back(s + 1);
  for (std::uint32_t s = 0; s + 2 < n_sys; ++s) {
    std::uint32_t extra = sample_degree(rng, 1.0);
    std::uniform_int_distribution<std::uint32_t> target(s + 2, n_sys - 1);
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < extra; ++i) {
      std::uint32_t t = target(rng);
      if (seen.insert(t).second)
        g.succ[s].push_back(t);
    }
  }
  if (nonempty) {
    g.succ[n_sys - 1].push_back(n_sys);
    g.succ[n_sys].push_back(n_sys);  // accepting sink loop
  }
  return g;
}

ExplicitGBA gen_nonacc_scc_chain(std::uint32_t n_sccs, std::uint32_t scc_size, std::uint64_t seed) {
  if (n_sccs < 1 || scc_size < 1)
    throw ContractError("chain generator needs at least one SCC of at least one state");
  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dull);
  const std::uint32_t n = n_sccs * scc_size;
  ExplicitGBA g;
  g.conditions = 1;
  g.succ.resize(n);
  g.acc.resize(n);
  std::bernoulli_distribution chord(0.3);
  for (std::uint32_t c = 0; c < n_sccs; ++c) {
    const std::uint32_t base = c * scc_size;
    for (std::uint32_t i = 0; i < scc_size; ++i)
      g.succ[base + i].push_back(base + (i + 1) % scc_size);
    if (scc_size > 2) {
      // chords stay inside the ring, so the SCC count is unchanged
      for (std::uint32_t i = 0; i < scc_size; ++i) {
        if (chord(rng)) {
          std::uniform_int_distribution<std::uint32_t> target(0, scc_size - 1);
          std::uint32_t t = base + target(rng);
          auto& list = g.succ[base + i];
          if (std::find(list.begin(), list.end(), t) == list.end())
            list.push_back(t);
        }
      }
    }
    if (c + 1 < n_sccs)
      g.succ[base + scc_size - 1].push_back(base + scc_size);
  }
  return g;
}

}  // namespace buchi
