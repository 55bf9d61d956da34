#pragma once

#include "buchi/metrics.hpp"
#include "buchi/verdict.hpp"

namespace buchi {

/// Result of one emptiness check. Counterexamples are always genuine; the
/// qualifier flags apply to Empty verdicts only.
struct CheckResult {
  Verdict verdict;
  Metrics metrics;
  /// Bitstate mode: an Empty verdict means "probably empty".
  bool approximate = false;
  /// Simple-DFS mode: an Empty verdict is sound only if the input is weak,
  /// which is the caller's obligation.
  bool weak_assumed = false;
};

}  // namespace buchi
