#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "buchi/acceptance.hpp"

namespace buchi {

/// Materialized generalized Büchi automaton. States are dense ids 0..n-1;
/// successor lists are ordered and duplicate-free, and every algorithm
/// consumes them in that order, so cross-algorithm comparisons see one fixed
/// exploration order.
struct ExplicitGBA {
  std::uint32_t init = 0;
  std::uint32_t conditions = 0;                  // k; 1 for a plain BA
  std::vector<std::vector<std::uint32_t>> succ;  // by state id
  std::vector<AcceptanceSet> acc;                // by state id

  std::uint32_t state_count() const noexcept { return static_cast<std::uint32_t>(succ.size()); }

  bool accepting(std::uint32_t s, std::uint32_t j) const { return acc[s].contains(j); }

  /// Throws ContractError if the structural invariants do not hold.
  void validate() const;
};

/// Text format, line oriented, '#' starts a comment:
///   gba <n> <k>
///   init <s>
///   acc <s> <j>          (j is 1-based)
///   edge <u> <v>         (file order = exploration order)
/// Plain BA files use k = 1.
ExplicitGBA parse_gba(std::istream& in);
ExplicitGBA load_gba(const std::string& path);
void write_gba(std::ostream& out, const ExplicitGBA& g);
std::string to_text(const ExplicitGBA& g);

}  // namespace buchi
