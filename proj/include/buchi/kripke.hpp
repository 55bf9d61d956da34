#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "buchi/guard.hpp"

namespace buchi {

/// Finite transition system with atomic-proposition labels on states.
struct KripkeStructure {
  std::uint32_t init = 0;
  std::vector<std::vector<std::uint32_t>> succ;
  std::vector<PropSet> labels;  // by state id, sorted and duplicate-free

  std::uint32_t state_count() const noexcept { return static_cast<std::uint32_t>(succ.size()); }

  void validate() const;
};

/// Text format:
///   kripke <n>
///   init <s>
///   label <s> <ident>...
///   edge <u> <v>
KripkeStructure parse_kripke(std::istream& in);
KripkeStructure load_kripke(const std::string& path);
void write_kripke(std::ostream& out, const KripkeStructure& m);

}  // namespace buchi
