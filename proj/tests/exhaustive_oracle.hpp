#pragma once

// Test-only emptiness decision by brute force, independent of the library's
// SCC machinery: enumerate every simple cycle, group mutually reachable
// cycles (reachability by plain BFS), and accept iff some reachable group
// covers every acceptance condition. Exponential; n <= 12 or so.

#include <cstdint>
#include <vector>

#include "buchi/explicit_gba.hpp"

namespace buchi::testing {

/// All simple cycles, each as the list of states in cycle order.
/// Throws std::runtime_error if more than `budget` cycles exist.
std::vector<std::vector<std::uint32_t>> enumerate_simple_cycles(const ExplicitGBA& g,
                                                                std::size_t budget = 2'000'000);

/// True iff the automaton has an accepting run.
bool exhaustive_nonempty(const ExplicitGBA& g);

}  // namespace buchi::testing
