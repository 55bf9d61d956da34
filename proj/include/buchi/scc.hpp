#pragma once

#include <cstdint>
#include <vector>

#include "buchi/explicit_gba.hpp"

namespace buchi {

struct Scc {
  std::vector<std::uint32_t> states;
  /// False iff a singleton without a self-loop.
  bool nontrivial = false;
  /// Union of the members' acceptance sets.
  AcceptanceSet acc;
};

/// Maximal SCCs of the part reachable from the initial state, in DFS
/// completion order (an SCC appears after every SCC it can reach).
/// Unreachable states are not reported.
std::vector<Scc> scc_decompose(const ExplicitGBA& g);

/// True iff every SCC is contained in A_1 or disjoint from it.
/// Defined for plain BAs only; throws ContractError when k != 1.
bool is_weak(const ExplicitGBA& g);

}  // namespace buchi
