#pragma once

#include <cstdint>

#include "buchi/explicit_gba.hpp"

namespace buchi {

/// Parameters for the random automaton generators. All generators are
/// deterministic in the seed.
struct GenConfig {
  std::uint32_t states = 1;
  double avg_out_degree = 1.0;
  std::uint32_t conditions = 1;  // k
  double acc_density = 0.5;      // probability per (state, condition)
  std::uint64_t seed = 0;

  void validate() const;
};

/// Random GBA: out-degrees sampled geometrically around avg_out_degree,
/// targets uniform, acceptance sampled per (state, condition). State 0 is
/// initial. The mix yields both trivial and non-trivial SCCs.
ExplicitGBA random_gba(const GenConfig& c);

/// Random weak BA (k = 1): a random graph whose acceptance is assigned per
/// whole SCC, so is_weak holds by construction. conditions must be 1.
ExplicitGBA weak_random(const GenConfig& c);

/// Emulates the product of an acyclic-heavy system with a one-state looping
/// property of the "eventually recurring proposition" kind: a DAG backbone of
/// n_sys accepting states, each a trivial SCC. With `nonempty`, a looping
/// accepting sink is appended and reachable; otherwise the automaton is a
/// pure DAG and empty. Weak in both shapes. n_sys >= 2.
ExplicitGBA gen_trivial_accepting(std::uint32_t n_sys, std::uint64_t seed, bool nonempty);

/// A chain of non-trivial, non-accepting SCCs (k = 1, no accepting states),
/// reachable from state 0; always empty. Each SCC is a ring of scc_size
/// states plus seeded chords.
ExplicitGBA gen_nonacc_scc_chain(std::uint32_t n_sccs, std::uint32_t scc_size, std::uint64_t seed);

}  // namespace buchi
