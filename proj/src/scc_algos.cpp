#include "buchi/scc_algos.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_map>

#include "buchi/errors.hpp"

namespace buchi {

namespace {

// Shortest path over raw edges restricted to a state predicate. Used only for
// counterexample reconstruction, so it bypasses the metered provider.
class RestrictedBfs {
 public:
  RestrictedBfs(AutomatonProvider& raw, const StateStore& store,
                std::function<bool(StateRef)> allowed)
      : raw_(raw), store_(store), allowed_(std::move(allowed)) {}

  // Path from -> to, both inclusive. With min_one_edge, the path uses at
  // least one edge even when from == to. Empty result = unreachable.
  std::vector<StateRef> path(StateRef from, StateRef to, bool min_one_edge) {
    return search(from, [&](StateRef x) { return x == to; }, min_one_edge);
  }

  // Path from `from` to the nearest state satisfying `goal` (>= 1 edge).
  std::vector<StateRef> path_to(StateRef from, const std::function<bool(StateRef)>& goal) {
    return search(from, goal, true);
  }

 private:
  std::vector<StateRef> search(StateRef from, const std::function<bool(StateRef)>& goal,
                               bool min_one_edge) {
    if (!min_one_edge && goal(from))
      return {from};
    std::unordered_map<std::uint32_t, StateRef> parent;  // discovered -> predecessor
    parent.emplace(from.index, from);
    std::deque<StateRef> queue{from};
    while (!queue.empty()) {
      StateRef x = queue.front();
      queue.pop_front();
      for (const auto& d : neighbors(x)) {
        auto r = store_.find(d);
        if (!r || !allowed_(*r))
          continue;
        if (goal(*r)) {
          auto path = chain(from, x, parent);
          path.push_back(*r);
          return path;
        }
        if (parent.emplace(r->index, x).second)
          queue.push_back(*r);
      }
    }
    return {};
  }

  // Path from -> x along the BFS tree, both inclusive.
  std::vector<StateRef> chain(StateRef from, StateRef x,
                              const std::unordered_map<std::uint32_t, StateRef>& parent) {
    std::vector<StateRef> rev{x};
    StateRef cur = x;
    while (cur != from) {
      cur = parent.at(cur.index);
      rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

  const std::vector<StateDescriptor>& neighbors(StateRef x) {
    auto it = cache_.find(x.index);
    if (it == cache_.end())
      it = cache_.emplace(x.index, raw_.post(store_.descriptor(x))).first;
    return it->second;
  }

  AutomatonProvider& raw_;
  const StateStore& store_;
  std::function<bool(StateRef)> allowed_;
  std::unordered_map<std::uint32_t, std::vector<StateDescriptor>> cache_;
};

}  // namespace

Lasso extract_scc_lasso(AutomatonProvider& raw, const StateStore& store,
                        const std::vector<StateRef>& search_path,
                        const std::function<bool(StateRef)>& in_scc, StateRef root,
                        AcceptanceSet target,
                        const std::function<AcceptanceSet(StateRef)>& acc_of) {
  Lasso lasso;
  auto root_pos = std::find(search_path.begin(), search_path.end(), root);
  if (root_pos == search_path.end())
    throw InvariantViolation("merged SCC root is not on the search path");
  for (auto it = search_path.begin(); it <= root_pos; ++it)
    lasso.prefix.push_back(store.descriptor(*it));

  RestrictedBfs bfs(raw, store, in_scc);
  std::vector<StateRef> walk{root};
  AcceptanceSet covered = acc_of(root);
  while (covered != (covered | target)) {
    auto leg = bfs.path_to(walk.back(), [&](StateRef x) {
      return (acc_of(x).bits() & target.bits() & ~covered.bits()) != 0;
    });
    if (leg.empty())
      throw InvariantViolation("acceptance witness unreachable inside merged SCC");
    for (std::size_t i = 1; i < leg.size(); ++i) {
      covered |= acc_of(leg[i]);
      walk.push_back(leg[i]);
    }
  }
  auto back = bfs.path(walk.back(), root, /*min_one_edge=*/true);
  if (back.empty())
    throw InvariantViolation("cannot close cycle inside merged SCC");
  for (std::size_t i = 1; i < back.size(); ++i)
    walk.push_back(back[i]);

  // walk = root ... root; rotate so the loop starts right after the root.
  for (std::size_t i = 1; i < walk.size(); ++i)
    lasso.loop.push_back(store.descriptor(walk[i]));
  return lasso;
}

namespace {

struct Frame {
  StateRef state;
  std::vector<StateRef> succs;
  std::size_t next = 0;
};

// State shared by the three engines: interning, per-ref tables, frames,
// metrics and instrumentation plumbing.
class SccEngineBase {
 protected:
  SccEngineBase(AutomatonProvider& p, const SccOptions& opts) : provider_(p), opts_(opts) {}
  virtual ~SccEngineBase() = default;

  /// Called whenever the store grows, before the new ref is used; engines
  /// keep their per-state tables sized to store_.size().
  virtual void on_store_grown() = 0;

  StateRef intern(const StateDescriptor& d) {
    auto [ref, was_new] = store_.intern(d);
    if (was_new) {
      dfsnum_.push_back(0);
      acc_.push_back(provider_.acceptance(d));
      on_store_grown();
    }
    return ref;
  }

  std::vector<StateRef> expand(StateRef s) {
    auto succs = provider_.post(store_.descriptor(s));
    std::vector<StateRef> refs;
    refs.reserve(succs.size());
    for (const auto& d : succs)
      refs.push_back(intern(d));
    return refs;
  }

  // The engines put s on path_ before emitting any event for it, so views
  // stay consistent; the frame itself is opened after the bookkeeping.
  void open_frame(StateRef s) {
    Frame f;
    f.state = s;
    f.succs = expand(s);
    frames_.push_back(std::move(f));
    metrics_.max_search_depth = std::max<std::uint64_t>(metrics_.max_search_depth, frames_.size());
  }

  CheckResult finish(std::chrono::steady_clock::time_point start, std::uint32_t aux_bits) {
    metrics_.post_calls = provider_.post_calls();
    metrics_.successors_generated = provider_.successors_generated();
    metrics_.distinct_states = store_.size();
    metrics_.aux_bits_per_state = aux_bits;
    metrics_.descriptor_bytes = store_.descriptor_bytes();
    metrics_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CheckResult result;
    result.verdict = std::move(verdict_);
    result.metrics = metrics_;
    return result;
  }

  CountingProvider provider_;
  const SccOptions& opts_;
  StateStore store_;
  std::vector<std::uint32_t> dfsnum_;
  std::vector<AcceptanceSet> acc_;
  std::vector<Frame> frames_;
  std::vector<StateRef> path_;
  std::uint32_t count_ = 0;
  Metrics metrics_;
  Verdict verdict_ = Verdict::empty();
  bool done_ = false;
  TraceEvent last_event_ = TraceEvent::report("");
};

class AsccEngine : SccEngineBase {
 public:
  AsccEngine(AutomatonProvider& p, const SccOptions& opts) : SccEngineBase(p, opts) {}

  CheckResult run() {
    auto start = std::chrono::steady_clock::now();
    const AcceptanceSet full = AcceptanceSet::all(provider_.conditions());
    visit(intern(provider_.initial()));
    settle();
    while (!frames_.empty() && !done_) {
      Frame& f = frames_.back();
      if (f.next < f.succs.size()) {
        StateRef t = f.succs[f.next++];
        ++metrics_.transitions_explored;
        step(TraceEvent::edge(f.state, t));
        if (dfsnum_[t.index] == 0) {
          visit(t);
          settle();
        } else if (current_[t.index]) {
          collapse(t, full);
          if (!done_)
            settle();
        } else {
          // transition to an inactive state: its SCC is complete, no action
          settle();
        }
      } else {
        backtrack();
        settle();
      }
    }
    return finish(start, 33);  // dfsnum + current bit
  }

 private:
  void on_store_grown() override { current_.resize(store_.size(), 0); }

  void visit(StateRef s) {
    dfsnum_[s.index] = ++count_;
    current_[s.index] = 1;
    path_.push_back(s);
    active_.push_back(s);
    step(TraceEvent::visit(s));
    roots_.push_back({s, acc_[s.index]});
    step(TraceEvent::roots_push(s));
    open_frame(s);
  }

  void collapse(StateRef t, AcceptanceSet full) {
    AcceptanceSet merged;
    StateRef u;
    bool fired = false;
    do {
      if (roots_.empty())
        throw InvariantViolation("roots stack exhausted during collapse");
      RootsEntry entry = roots_.back();
      roots_.pop_back();
      step(TraceEvent::roots_pop(entry.root));
      merged |= entry.acc;
      u = entry.root;
      if (!fired && merged == full) {
        fired = true;
        step(TraceEvent::report("cycle-collapse"));
      }
    } while (dfsnum_[u.index] > dfsnum_[t.index]);
    roots_.push_back({u, merged});
    step(TraceEvent::collapse(merged));
    step(TraceEvent::roots_push(u));
    if (fired) {
      StateRef root = u;
      auto in_scc = [&](StateRef x) {
        return dfsnum_[x.index] != 0 && current_[x.index] && dfsnum_[x.index] >= dfsnum_[root.index];
      };
      auto acc_of = [&](StateRef x) { return acc_[x.index]; };
      verdict_ = Verdict::counterexample(
          extract_scc_lasso(provider_.inner(), store_, path_, in_scc, root, full, acc_of));
      done_ = true;
    }
  }

  void backtrack() {
    StateRef s = frames_.back().state;
    if (!roots_.empty() && roots_.back().root == s) {
      roots_.pop_back();
      step(TraceEvent::roots_pop(s));
      StateRef u;
      do {
        u = active_.back();
        active_.pop_back();
        current_[u.index] = 0;
        step(TraceEvent::inactive(u));
      } while (u != s);
    }
    frames_.pop_back();
    path_.pop_back();
  }

  void step(const TraceEvent& e) {
    last_event_ = e;
    if (opts_.trace)
      opts_.trace->on_event(e);
    notify(false);
  }

  void settle() { notify(true); }

  void notify(bool settled) {
    if (!opts_.on_step)
      return;
    opts_.on_step(SccDebugView{last_event_, settled, dfsnum_, path_, &roots_, &active_, &current_,
                               nullptr, nullptr, store_});
  }

  std::vector<std::uint8_t> current_;
  std::vector<RootsEntry> roots_;
  std::vector<StateRef> active_;
};

class GvEngine : SccEngineBase {
 public:
  GvEngine(AutomatonProvider& p, const SccOptions& opts) : SccEngineBase(p, opts) {
    if (p.conditions() != 1)
      throw ContractError("this check handles a single acceptance condition (k = 1), got k = " +
                          std::to_string(p.conditions()));
  }

  CheckResult run() {
    auto start = std::chrono::steady_clock::now();
    visit(intern(provider_.initial()));
    settle();
    while (!frames_.empty() && !done_) {
      Frame& f = frames_.back();
      if (f.next < f.succs.size()) {
        StateRef t = f.succs[f.next++];
        ++metrics_.transitions_explored;
        step(TraceEvent::edge(f.state, t));
        if (dfsnum_[t.index] == 0) {
          visit(t);
        } else if (current_[t.index]) {
          if (!acc_path_.empty() && dfsnum_[t.index] <= acc_path_.back().first) {
            step(TraceEvent::report("cycle-gv-edge"));
            report_edge_hit(f.state, t);
          } else {
            lowlink_[f.state.index] = std::min(lowlink_[f.state.index], dfsnum_[t.index]);
          }
        }
        if (!done_)
          settle();
      } else {
        backtrack();
        if (!done_)
          settle();
      }
    }
    return finish(start, 65);  // dfsnum + lowlink + current bit
  }

 private:
  void on_store_grown() override {
    lowlink_.resize(store_.size(), 0);
    current_.resize(store_.size(), 0);
  }

  void visit(StateRef s) {
    dfsnum_[s.index] = ++count_;
    lowlink_[s.index] = count_;
    current_[s.index] = 1;
    path_.push_back(s);
    active_.push_back(s);
    if (acc_[s.index].contains(1))
      acc_path_.push_back({count_, s});
    step(TraceEvent::visit(s));
    open_frame(s);
  }

  void backtrack() {
    StateRef s = frames_.back().state;
    if (acc_[s.index].contains(1)) {
      if (lowlink_[s.index] < dfsnum_[s.index]) {
        // Unreachable in practice: the edge condition fires first on the edge
        // that lowered the lowlink below an accepting path state.
        step(TraceEvent::report("cycle-gv-backtrack"));
        report_backtrack_hit(s);
        return;
      }
      acc_path_.pop_back();
    }
    if (lowlink_[s.index] == dfsnum_[s.index]) {
      StateRef u;
      do {
        u = active_.back();
        active_.pop_back();
        current_[u.index] = 0;
        step(TraceEvent::inactive(u));
      } while (u != s);
    }
    frames_.pop_back();
    path_.pop_back();
    if (!frames_.empty()) {
      StateRef parent = frames_.back().state;
      lowlink_[parent.index] = std::min(lowlink_[parent.index], lowlink_[s.index]);
    }
  }

  // Loop: s -> t, t to the deepest accepting path state through active
  // states, then down the search path back to s.
  void report_edge_hit(StateRef s, StateRef t) {
    StateRef deepest = acc_path_.back().second;
    auto in_active = [&](StateRef x) { return dfsnum_[x.index] != 0 && current_[x.index]; };
    RestrictedBfs bfs(provider_.inner(), store_, in_active);
    std::vector<StateRef> walk{s, t};
    if (t != deepest) {
      auto leg = bfs.path(t, deepest, false);
      if (leg.empty())
        throw InvariantViolation("deepest accepting state unreachable from cyan hit");
      walk.insert(walk.end(), leg.begin() + 1, leg.end());
    }
    auto seg = std::find(path_.begin(), path_.end(), deepest);
    if (seg == path_.end())
      throw InvariantViolation("deepest accepting state not on the search path");
    walk.insert(walk.end(), seg + 1, path_.end());  // deepest ... s, excluding deepest
    conclude_with_walk(walk);
  }

  // Accepting s with lowlink below its own number: s lies on a cycle within
  // the active states.
  void report_backtrack_hit(StateRef s) {
    auto in_active = [&](StateRef x) { return dfsnum_[x.index] != 0 && current_[x.index]; };
    RestrictedBfs bfs(provider_.inner(), store_, in_active);
    auto cycle = bfs.path(s, s, true);
    if (cycle.empty())
      throw InvariantViolation("no cycle through accepting state despite lowlink evidence");
    conclude_with_walk(cycle);
  }

  // walk is a closed cycle s ... s; the prefix is the search path up to s
  // and the loop starts right after s, ending back at s.
  void conclude_with_walk(const std::vector<StateRef>& walk) {
    if (walk.size() < 2 || walk.front() != walk.back())
      throw InvariantViolation("reported cycle is not closed");
    Lasso lasso;
    for (StateRef x : path_)
      lasso.prefix.push_back(store_.descriptor(x));
    for (std::size_t i = 1; i < walk.size(); ++i)
      lasso.loop.push_back(store_.descriptor(walk[i]));
    verdict_ = Verdict::counterexample(std::move(lasso));
    done_ = true;
  }

  void step(const TraceEvent& e) {
    last_event_ = e;
    if (opts_.trace)
      opts_.trace->on_event(e);
    notify(false);
  }

  void settle() { notify(true); }

  void notify(bool settled) {
    if (!opts_.on_step)
      return;
    opts_.on_step(SccDebugView{last_event_, settled, dfsnum_, path_, nullptr, &active_, &current_,
                               nullptr, &lowlink_, store_});
  }

  std::vector<std::uint32_t> lowlink_;
  std::vector<std::uint8_t> current_;
  std::vector<StateRef> active_;
  std::vector<std::pair<std::uint32_t, StateRef>> acc_path_;  // accepting states on the path
};

class C99Engine : SccEngineBase {
 public:
  C99Engine(AutomatonProvider& p, const SccOptions& opts) : SccEngineBase(p, opts) {}

  CheckResult run() {
    auto start = std::chrono::steady_clock::now();
    const AcceptanceSet full = AcceptanceSet::all(provider_.conditions());
    visit(intern(provider_.initial()));
    settle();
    while (!frames_.empty() && !done_) {
      Frame& f = frames_.back();
      if (f.next < f.succs.size()) {
        StateRef t = f.succs[f.next++];
        ++metrics_.transitions_explored;
        step(TraceEvent::edge(f.state, t));
        if (dfsnum_[t.index] == 0) {
          visit(t);
        } else if (!removed_[t.index]) {
          collapse(t, full);
        }
        if (!done_)
          settle();
      } else {
        backtrack();
        settle();
      }
    }
    return finish(start, 33);  // dfsnum + removed bit
  }

 private:
  void on_store_grown() override { removed_.resize(store_.size(), 0); }

  void visit(StateRef s) {
    dfsnum_[s.index] = ++count_;
    path_.push_back(s);
    step(TraceEvent::visit(s));
    roots_.push_back({s, acc_[s.index]});
    step(TraceEvent::roots_push(s));
    open_frame(s);
  }

  void collapse(StateRef t, AcceptanceSet full) {
    AcceptanceSet merged;
    StateRef u;
    bool fired = false;
    do {
      if (roots_.empty())
        throw InvariantViolation("roots stack exhausted during collapse");
      RootsEntry entry = roots_.back();
      roots_.pop_back();
      step(TraceEvent::roots_pop(entry.root));
      merged |= entry.acc;
      u = entry.root;
      if (!fired && merged == full) {
        fired = true;
        step(TraceEvent::report("cycle-collapse"));
      }
    } while (dfsnum_[u.index] > dfsnum_[t.index]);
    roots_.push_back({u, merged});
    step(TraceEvent::collapse(merged));
    step(TraceEvent::roots_push(u));
    if (fired) {
      StateRef root = u;
      auto in_scc = [&](StateRef x) {
        return dfsnum_[x.index] != 0 && !removed_[x.index] && dfsnum_[x.index] >= dfsnum_[root.index];
      };
      auto acc_of = [&](StateRef x) { return acc_[x.index]; };
      verdict_ = Verdict::counterexample(
          extract_scc_lasso(provider_.inner(), store_, path_, in_scc, root, full, acc_of));
      done_ = true;
    }
  }

  void backtrack() {
    StateRef s = frames_.back().state;
    if (!roots_.empty() && roots_.back().root == s) {
      roots_.pop_back();
      step(TraceEvent::roots_pop(s));
      removal_dfs(s);
    }
    frames_.pop_back();
    path_.pop_back();
  }

  // Everything reachable from a completed root and not yet removed is exactly
  // its SCC. Marking it recomputes successors through the metered provider;
  // those extra post calls are the cost this algorithm pays for dropping the
  // Tarjan stack.
  void removal_dfs(StateRef root) {
    std::vector<StateRef> stack{root};
    removed_[root.index] = 1;
    step(TraceEvent::inactive(root));
    while (!stack.empty()) {
      StateRef x = stack.back();
      stack.pop_back();
      for (const auto& d : provider_.post(store_.descriptor(x))) {
        auto r = store_.find(d);
        if (!r)
          throw InvariantViolation("removal DFS saw an unknown successor");
        if (!removed_[r->index]) {
          removed_[r->index] = 1;
          step(TraceEvent::inactive(*r));
          stack.push_back(*r);
        }
      }
    }
  }

  void step(const TraceEvent& e) {
    last_event_ = e;
    if (opts_.trace)
      opts_.trace->on_event(e);
    notify(false);
  }

  void settle() { notify(true); }

  void notify(bool settled) {
    if (!opts_.on_step)
      return;
    opts_.on_step(SccDebugView{last_event_, settled, dfsnum_, path_, &roots_, nullptr, nullptr,
                               &removed_, nullptr, store_});
  }

  std::vector<std::uint8_t> removed_;
  std::vector<RootsEntry> roots_;
};

}  // namespace

CheckResult ascc_check(AutomatonProvider& p, const SccOptions& opts) {
  return AsccEngine(p, opts).run();
}

CheckResult gv_check(AutomatonProvider& p, const SccOptions& opts) { return GvEngine(p, opts).run(); }

CheckResult c99_check(AutomatonProvider& p, const SccOptions& opts) {
  return C99Engine(p, opts).run();
}

}  // namespace buchi
