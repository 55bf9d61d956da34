#pragma once

#include <cstdint>
#include <memory>

#include "buchi/explicit_gba.hpp"
#include "buchi/ndfs.hpp"
#include "buchi/scc_algos.hpp"

namespace buchi {

/// Step-by-step validator for the colour semantics of the nested-DFS family,
/// run against a materialized automaton:
///   (a) the cyan states are exactly the blue search path (LIFO discipline);
///   (b) every cyan state can reach the currently active blue state;
///   (c) blue states are non-accepting and off the path;
///   (d) whenever a blue invocation finishes, no red state lies on any
///       counterexample.
/// Violations throw InvariantViolation. Attach via options.on_step.
class NdfsInvariantChecker {
 public:
  /// check_blue_nonaccepting is false for the simple-DFS variant, where
  /// accepting states legitimately turn blue.
  explicit NdfsInvariantChecker(const ExplicitGBA& g, bool check_blue_nonaccepting = true);
  ~NdfsInvariantChecker();

  NdfsStepFn hook();

  std::uint64_t steps_checked() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Step-by-step validator for the SCC-based searches against a materialized
/// automaton. At every step: search-path numbers strictly increase (Fact 1)
/// and the roots are a subsequence of the search path (Fact 6). At settled
/// steps: the roots stack equals a from-scratch recomputation of the active
/// graph's SCC roots with their acceptance unions, the active stack holds
/// exactly the active states (main invariant, subsumes Fact 2), lower-numbered
/// active states reach higher-numbered ones in the explored graph (Fact 8),
/// and a set deactivated at a backtrack is a maximal SCC of the automaton
/// (Facts 4/5). Checks skip whatever the view does not carry, so the same
/// checker serves the lowlink-based search.
class SccInvariantChecker {
 public:
  explicit SccInvariantChecker(const ExplicitGBA& g);
  ~SccInvariantChecker();

  SccStepFn hook();

  std::uint64_t steps_checked() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace buchi
