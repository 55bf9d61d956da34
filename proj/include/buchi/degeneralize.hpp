#pragma once

#include "buchi/explicit_gba.hpp"

namespace buchi {

/// Index of copy (s, i) in the degeneralized automaton, i in 1..k.
constexpr std::uint32_t degeneralized_index(std::uint32_t s, std::uint32_t i, std::uint32_t k) {
  return s * k + (i - 1);
}

/// GBA -> BA via the state-copy counter construction: the result has n*k
/// states (s, i); an edge s -> t becomes (s, i) -> (t, j) with j advancing
/// cyclically when s is in A_i and staying at i otherwise. Accepting states
/// are {(s, k) : s in A_k}. Emptiness is preserved.
///
/// k = 1 yields a copy of the input; k = 0 yields a copy with every state
/// accepting (the empty condition set holds vacuously, so any reachable
/// non-trivial SCC of the input is accepting, and the copy mirrors that).
ExplicitGBA degeneralize(const ExplicitGBA& g);

}  // namespace buchi
