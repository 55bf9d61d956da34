#include "buchi/invariants.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "buchi/errors.hpp"
#include "buchi/scc.hpp"

namespace buchi {

namespace {

// Reflexive transitive closure, dense. Desk-scale instances only.
std::vector<std::vector<std::uint8_t>> closure_of(const ExplicitGBA& g) {
  const std::uint32_t n = g.state_count();
  std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
  for (std::uint32_t s = 0; s < n; ++s) {
    std::deque<std::uint32_t> queue{s};
    reach[s][s] = 1;
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::uint32_t t : g.succ[x])
        if (!reach[s][t]) {
          reach[s][t] = 1;
          queue.push_back(t);
        }
    }
  }
  return reach;
}

[[noreturn]] void violate(const std::string& what) { throw InvariantViolation(what); }

std::uint32_t graph_id(const StateStore& store, StateRef r) {
  return store.descriptor(r).as_state();
}

}  // namespace

// ---------------------------------------------------------------------------
// Nested DFS

struct NdfsInvariantChecker::Impl {
  const ExplicitGBA& g;
  bool check_blue_nonaccepting;
  std::vector<std::vector<std::uint8_t>> reach;
  std::vector<std::uint8_t> on_counterexample;  // by graph id
  std::uint64_t steps = 0;

  Impl(const ExplicitGBA& graph, bool check_blue) : g(graph), check_blue_nonaccepting(check_blue) {
    g.validate();
    reach = closure_of(g);
    // A state lies on some counterexample iff it is reachable from the
    // initial state and reaches an SCC carrying every condition.
    const AcceptanceSet full = AcceptanceSet::all(g.conditions);
    std::vector<std::uint32_t> witnesses;
    for (const Scc& c : scc_decompose(g))
      if (c.nontrivial && (c.acc.bits() & full.bits()) == full.bits())
        for (std::uint32_t s : c.states)
          witnesses.push_back(s);
    on_counterexample.assign(g.state_count(), 0);
    for (std::uint32_t x = 0; x < g.state_count(); ++x) {
      if (!reach[g.init][x])
        continue;
      for (std::uint32_t w : witnesses)
        if (reach[x][w]) {
          on_counterexample[x] = 1;
          break;
        }
    }
  }

  void check(const NdfsDebugView& v) {
    ++steps;
    const auto& colors = v.colors;

    // (a) cyan set == blue path set
    std::unordered_set<std::uint32_t> path_refs;
    for (StateRef r : v.blue_path) {
      if (!path_refs.insert(r.index).second)
        violate("blue path revisits a state");
      if (colors[r.index] != Color::Cyan)
        violate("path state is not cyan");
    }
    for (std::size_t i = 0; i < colors.size(); ++i)
      if (colors[i] == Color::Cyan && !path_refs.count(static_cast<std::uint32_t>(i)))
        violate("cyan state off the blue path");

    // (b) every cyan state reaches the currently active blue state
    if (!v.blue_path.empty()) {
      std::uint32_t active = graph_id(v.store, v.blue_path.back());
      for (StateRef r : v.blue_path)
        if (!reach[graph_id(v.store, r)][active])
          violate("cyan state cannot reach the active state");
    }

    // (c) blue states are non-accepting (And/Baseline) and finished
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] != Color::Blue)
        continue;
      std::uint32_t id = graph_id(v.store, StateRef(static_cast<std::uint32_t>(i)));
      if (check_blue_nonaccepting && g.acc[id].contains(1))
        violate("accepting state coloured blue");
      if (path_refs.count(static_cast<std::uint32_t>(i)))
        violate("blue state still on the search path");
    }

    // (d) red states never lie on a counterexample, checked whenever a blue
    // invocation finishes (a cyan state settles its final colour)
    if (v.event.kind == TraceEvent::Kind::Color && v.event.from == Color::Cyan) {
      for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == Color::Red &&
            on_counterexample[graph_id(v.store, StateRef(static_cast<std::uint32_t>(i)))])
          violate("red state lies on a counterexample");
    }
  }
};

NdfsInvariantChecker::NdfsInvariantChecker(const ExplicitGBA& g, bool check_blue_nonaccepting)
    : impl_(std::make_unique<Impl>(g, check_blue_nonaccepting)) {}

NdfsInvariantChecker::~NdfsInvariantChecker() = default;

NdfsStepFn NdfsInvariantChecker::hook() {
  return [impl = impl_.get()](const NdfsDebugView& v) { impl->check(v); };
}

std::uint64_t NdfsInvariantChecker::steps_checked() const { return impl_->steps; }

// ---------------------------------------------------------------------------
// SCC-based searches

struct SccInvariantChecker::Impl {
  const ExplicitGBA& g;
  std::vector<Scc> full_sccs;
  std::vector<std::vector<std::uint32_t>> explored;  // by graph id
  std::vector<std::uint8_t> explored_state;          // by graph id
  std::vector<std::uint32_t> pending_inactive;       // graph ids since last settle
  std::uint64_t steps = 0;

  explicit Impl(const ExplicitGBA& graph) : g(graph) {
    g.validate();
    full_sccs = scc_decompose(g);
    explored.resize(g.state_count());
    explored_state.assign(g.state_count(), 0);
  }

  void check(const SccDebugView& v) {
    ++steps;
    track(v);
    every_step(v);
    if (v.settled)
      settled(v);
  }

  void track(const SccDebugView& v) {
    switch (v.event.kind) {
      case TraceEvent::Kind::Visit:
        explored_state[graph_id(v.store, v.event.s)] = 1;
        break;
      case TraceEvent::Kind::Edge: {
        auto s = graph_id(v.store, v.event.s);
        auto t = graph_id(v.store, v.event.t);
        if (std::find(explored[s].begin(), explored[s].end(), t) == explored[s].end())
          explored[s].push_back(t);
        break;
      }
      case TraceEvent::Kind::Inactive:
        pending_inactive.push_back(graph_id(v.store, v.event.s));
        break;
      default:
        break;
    }
  }

  void every_step(const SccDebugView& v) {
    // Fact 1: the search path carries strictly increasing DFS numbers.
    for (std::size_t i = 0; i + 1 < v.search_path.size(); ++i)
      if (v.dfsnum[v.search_path[i].index] >= v.dfsnum[v.search_path[i + 1].index])
        violate("search-path numbers not strictly increasing");

    // Fact 6: roots are a subsequence of the search path, bottom-up.
    if (v.roots) {
      std::size_t at = 0;
      for (const RootsEntry& e : *v.roots) {
        while (at < v.search_path.size() && v.search_path[at] != e.root)
          ++at;
        if (at == v.search_path.size())
          violate("roots stack is not a subsequence of the search path");
        ++at;
      }
    }

    if (v.lowlink) {
      for (StateRef r : v.search_path)
        if ((*v.lowlink)[r.index] > v.dfsnum[r.index])
          violate("lowlink above dfs number");
    }
  }

  void settled(const SccDebugView& v) {
    // Facts 4/5: a set deactivated at a backtrack is a maximal SCC of the
    // automaton itself. Applies to the removal marking as well.
    if (!pending_inactive.empty()) {
      std::unordered_set<std::uint32_t> popped(pending_inactive.begin(), pending_inactive.end());
      const Scc* match = nullptr;
      for (const Scc& c : full_sccs)
        if (popped.count(c.states.front())) {
          match = &c;
          break;
        }
      if (!match || match->states.size() != popped.size())
        violate("deactivated set is not one SCC of the automaton");
      for (std::uint32_t s : match->states)
        if (!popped.count(s))
          violate("deactivated set misses an SCC member");
      pending_inactive.clear();
    }

    if (!v.current)
      return;  // the roots-only variant keeps no activity bit to audit

    // Shadow decomposition of the explored graph from scratch.
    const std::uint32_t n = g.state_count();
    std::vector<std::int32_t> scc_of(n, -1);
    std::vector<std::vector<std::uint32_t>> sccs = explored_sccs(scc_of);

    // Active SCCs are those containing a search-path state.
    std::vector<std::uint8_t> scc_active(sccs.size(), 0);
    for (StateRef r : v.search_path)
      scc_active[scc_of[graph_id(v.store, r)]] = 1;

    std::vector<std::uint8_t> expect_active(n, 0);
    for (std::size_t c = 0; c < sccs.size(); ++c)
      if (scc_active[c])
        for (std::uint32_t s : sccs[c])
          expect_active[s] = 1;

    // Main invariant, second half: the current bits (and the Tarjan stack,
    // when kept) mark exactly the active states.
    std::vector<std::uint8_t> current_by_id(n, 0);
    for (std::uint32_t i = 0; i < v.current->size(); ++i)
      if ((*v.current)[i])
        current_by_id[graph_id(v.store, StateRef(i))] = 1;
    if (current_by_id != expect_active)
      violate("current bits disagree with the active graph");
    if (v.active) {
      std::uint64_t flagged = 0;
      for (std::uint8_t b : current_by_id)
        flagged += b;
      if (v.active->size() != flagged)
        violate("Tarjan stack size disagrees with the current bits");
      for (StateRef r : *v.active)
        if (!current_by_id[graph_id(v.store, r)])
          violate("Tarjan stack holds an inactive state");
    }

    // Main invariant, first half: the roots stack lists the active graph's
    // SCC roots in search-path order with the acceptance unions over the
    // SCCs (subsumes Fact 2: each root has its SCC's least number).
    if (v.roots) {
      struct Expected {
        std::uint32_t root_num;
        std::uint32_t root_id;
        AcceptanceSet acc;
      };
      std::vector<Expected> expected;
      for (std::size_t c = 0; c < sccs.size(); ++c) {
        if (!scc_active[c])
          continue;
        Expected e{UINT32_MAX, 0, {}};
        for (std::uint32_t s : sccs[c]) {
          std::uint32_t num = dfsnum_by_id(v, s);
          if (num < e.root_num) {
            e.root_num = num;
            e.root_id = s;
          }
          e.acc |= g.acc[s];
        }
        expected.push_back(e);
      }
      std::sort(expected.begin(), expected.end(),
                [](const Expected& a, const Expected& b) { return a.root_num < b.root_num; });
      if (expected.size() != v.roots->size())
        violate("roots stack size disagrees with the active graph");
      for (std::size_t i = 0; i < expected.size(); ++i) {
        const RootsEntry& got = (*v.roots)[i];
        if (graph_id(v.store, got.root) != expected[i].root_id)
          violate("roots stack root disagrees with the active graph");
        if (!(got.acc == expected[i].acc))
          violate("roots stack acceptance union disagrees with the active graph");
      }
    }

    // Fact 8: active states are linearly ordered by reachability along
    // increasing numbers; consecutive reachability implies the rest.
    std::vector<std::uint32_t> active_ids;
    for (std::uint32_t s = 0; s < n; ++s)
      if (expect_active[s])
        active_ids.push_back(s);
    std::sort(active_ids.begin(), active_ids.end(), [&](std::uint32_t a, std::uint32_t b) {
      return dfsnum_by_id(v, a) < dfsnum_by_id(v, b);
    });
    for (std::size_t i = 0; i + 1 < active_ids.size(); ++i)
      if (!explored_reaches(active_ids[i], active_ids[i + 1]))
        violate("lower-numbered active state cannot reach the next active state");
  }

  std::uint32_t dfsnum_by_id(const SccDebugView& v, std::uint32_t id) const {
    auto ref = v.store.find(StateDescriptor::of_state(id));
    if (!ref)
      violate("active state never interned");
    return v.dfsnum[ref->index];
  }

  std::vector<std::vector<std::uint32_t>> explored_sccs(std::vector<std::int32_t>& scc_of) const {
    // Tarjan over the explored subgraph, iterative.
    const std::uint32_t n = g.state_count();
    std::vector<std::uint32_t> num(n, 0), low(n, 0), stack;
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<std::vector<std::uint32_t>> out;
    std::uint32_t count = 0;
    struct Frame {
      std::uint32_t state;
      std::size_t next = 0;
    };
    std::vector<Frame> frames;
    for (std::uint32_t root = 0; root < n; ++root) {
      if (!explored_state[root] || num[root] != 0)
        continue;
      num[root] = low[root] = ++count;
      on_stack[root] = 1;
      stack.push_back(root);
      frames.push_back({root});
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next < explored[f.state].size()) {
          std::uint32_t t = explored[f.state][f.next++];
          if (num[t] == 0) {
            num[t] = low[t] = ++count;
            on_stack[t] = 1;
            stack.push_back(t);
            frames.push_back({t});
          } else if (on_stack[t]) {
            low[f.state] = std::min(low[f.state], num[t]);
          }
        } else {
          std::uint32_t s = f.state;
          if (low[s] == num[s]) {
            std::vector<std::uint32_t> scc;
            std::uint32_t u;
            do {
              u = stack.back();
              stack.pop_back();
              on_stack[u] = 0;
              scc_of[u] = static_cast<std::int32_t>(out.size());
              scc.push_back(u);
            } while (u != s);
            out.push_back(std::move(scc));
          }
          frames.pop_back();
          if (!frames.empty())
            low[frames.back().state] = std::min(low[frames.back().state], low[s]);
        }
      }
    }
    return out;
  }

  bool explored_reaches(std::uint32_t from, std::uint32_t to) const {
    if (from == to)
      return true;
    std::vector<std::uint8_t> seen(g.state_count(), 0);
    std::deque<std::uint32_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::uint32_t t : explored[x]) {
        if (t == to)
          return true;
        if (!seen[t]) {
          seen[t] = 1;
          queue.push_back(t);
        }
      }
    }
    return false;
  }
};

SccInvariantChecker::SccInvariantChecker(const ExplicitGBA& g) : impl_(std::make_unique<Impl>(g)) {}

SccInvariantChecker::~SccInvariantChecker() = default;

SccStepFn SccInvariantChecker::hook() {
  return [impl = impl_.get()](const SccDebugView& v) { impl->check(v); };
}

std::uint64_t SccInvariantChecker::steps_checked() const { return impl_->steps; }

}  // namespace buchi
