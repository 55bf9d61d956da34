#pragma once

#include <functional>
#include <vector>

#include "buchi/check_result.hpp"
#include "buchi/provider.hpp"
#include "buchi/trace.hpp"

namespace buchi {

/// One partially explored SCC on the roots stack: its root and the union of
/// the acceptance indices seen in the SCC so far.
struct RootsEntry {
  StateRef root;
  AcceptanceSet acc;
};

/// Snapshot handed to debug instrumentation after each step of an SCC-based
/// search. Fields not maintained by the algorithm are null. `settled` marks
/// the points after a fully processed state or transition, where the
/// roots/active invariants are expected to hold exactly.
struct SccDebugView {
  const TraceEvent& event;
  bool settled;
  const std::vector<std::uint32_t>& dfsnum;     // by StateRef index, 0 = unvisited
  const std::vector<StateRef>& search_path;
  const std::vector<RootsEntry>* roots;         // ascc, c99
  const std::vector<StateRef>* active;          // ascc, gv
  const std::vector<std::uint8_t>* current;     // ascc, gv
  const std::vector<std::uint8_t>* removed;     // c99
  const std::vector<std::uint32_t>* lowlink;    // gv
  const StateStore& store;
};

using SccStepFn = std::function<void(const SccDebugView&)>;

struct SccOptions {
  TraceSink* trace = nullptr;
  SccStepFn on_step;
};

/// SCC-based check with a roots stack and a Tarjan ("active") stack. Handles
/// any number of acceptance conditions, including k = 0. Reports as soon as a
/// merged SCC of the explored graph carries every condition.
CheckResult ascc_check(AutomatonProvider& p, const SccOptions& opts = {});

/// Tarjan with lowlinks that tracks the DFS number of the deepest accepting
/// state on the search path and reports when an edge reaches an active state
/// at or below it. Plain BAs only (k = 1); throws ContractError otherwise.
CheckResult gv_check(AutomatonProvider& p, const SccOptions& opts = {});

/// Roots stack without the Tarjan stack: completed SCCs must be marked
/// removed by an extra DFS that recomputes successors, which is exactly the
/// post-call penalty this variant is known for. Any k.
CheckResult c99_check(AutomatonProvider& p, const SccOptions& opts = {});

/// Builds a lasso at the instant a merged SCC covers `target`: the prefix
/// follows the search path to the merged root; the loop is a cycle inside the
/// merged SCC visiting a witness of every condition, found by searches
/// restricted to `in_scc` states. Throws InvariantViolation if no such cycle
/// exists. Exploration done here is not metered.
Lasso extract_scc_lasso(AutomatonProvider& raw, const StateStore& store,
                        const std::vector<StateRef>& search_path,
                        const std::function<bool(StateRef)>& in_scc, StateRef root,
                        AcceptanceSet target,
                        const std::function<AcceptanceSet(StateRef)>& acc_of);

}  // namespace buchi
