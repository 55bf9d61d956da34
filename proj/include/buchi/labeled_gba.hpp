#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "buchi/explicit_gba.hpp"
#include "buchi/guard.hpp"

namespace buchi {

/// Property automaton for products: an explicit GBA whose edges carry guards
/// over the system's atomic propositions. Acceptance stays on states.
struct LabeledGBA {
  ExplicitGBA graph;
  std::vector<std::vector<Guard>> guards;  // parallel to graph.succ

  void validate() const;
};

/// Extends the core automaton format with a guard on each edge line:
///   edge <u> <v> <guard>
/// The guard is quoted when it contains spaces; a missing guard means "true".
LabeledGBA parse_labeled_gba(std::istream& in);
LabeledGBA load_labeled_gba(const std::string& path);
void write_labeled_gba(std::ostream& out, const LabeledGBA& a);

}  // namespace buchi
