#pragma once

#include <functional>
#include <vector>

#include "buchi/check_result.hpp"
#include "buchi/provider.hpp"
#include "buchi/trace.hpp"

namespace buchi {

/// Snapshot handed to debug instrumentation after every atomic step of a
/// nested-DFS search. References stay valid only during the callback.
struct NdfsDebugView {
  const TraceEvent& event;
  const std::vector<Color>& colors;         // by StateRef index
  const std::vector<StateRef>& blue_path;   // current blue stack, bottom-up
  const std::vector<StateRef>& red_path;    // current red stack, empty outside the red DFS
  const StateStore& store;
};

using NdfsStepFn = std::function<void(const NdfsDebugView&)>;

struct NdfsOptions {
  TraceSink* trace = nullptr;
  NdfsStepFn on_step;  // debug instrumentation, off by default
};

/// Two-colour-pair nested DFS: the blue DFS discovers states; on backtracking
/// from an accepting state a red DFS looks for a path back onto the blue
/// search path. No early detection during the blue DFS. Each state is visited
/// at most once by each DFS. Requires a plain BA (k = 1).
CheckResult ndfs_baseline(AutomatonProvider& p, const NdfsOptions& opts = {});

/// Improved nested DFS: early cyan detection during the blue DFS, and a state
/// whose successors are all red is itself marked red without a red search
/// ("allred"), since red states are never part of any counterexample.
/// Requires a plain BA (k = 1).
CheckResult and_check(AutomatonProvider& p, const NdfsOptions& opts = {});

/// Simple DFS for weak automata: the blue DFS with cyan detection alone; the
/// red search is omitted because every loop of a weak automaton lies entirely
/// inside or outside the accepting set. post is invoked exactly once per
/// state. The caller asserts weakness; on non-weak input an Empty verdict is
/// unsound, and the result carries weak_assumed to record that. Requires k = 1.
CheckResult sd_check(AutomatonProvider& p, bool weak_asserted, const NdfsOptions& opts = {});

}  // namespace buchi
