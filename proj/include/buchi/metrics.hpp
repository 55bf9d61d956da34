#pragma once

#include <cstdint>

namespace buchi {

/// Exploration counters. Running time tracks the number of post invocations
/// and the successors they generate, so these are the comparison currency;
/// wall time is reported but never asserted.
struct Metrics {
  std::uint64_t post_calls = 0;
  std::uint64_t successors_generated = 0;
  std::uint64_t distinct_states = 0;
  std::uint64_t transitions_explored = 0;
  std::uint64_t max_search_depth = 0;
  std::uint32_t aux_bits_per_state = 0;
  /// Bytes held by stored state descriptors; they dwarf the auxiliary data.
  /// Zero in bitstate mode, which stores none.
  std::uint64_t descriptor_bytes = 0;
  double wall_seconds = 0.0;
};

}  // namespace buchi
