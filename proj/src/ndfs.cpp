#include "buchi/ndfs.hpp"

#include <algorithm>
#include <chrono>

#include "buchi/errors.hpp"

namespace buchi {

namespace {

enum class Variant { Baseline, And, Sd };

class NdfsEngine {
 public:
  NdfsEngine(AutomatonProvider& p, Variant variant, const NdfsOptions& opts)
      : provider_(p), variant_(variant), opts_(opts) {
    if (p.conditions() != 1)
      throw ContractError("nested DFS requires a plain BA (k = 1), got k = " +
                          std::to_string(p.conditions()));
  }

  CheckResult run() {
    auto start = std::chrono::steady_clock::now();
    push_blue(intern(provider_.initial()));
    while (!blue_.empty() && !done_) {
      Frame& f = blue_.back();
      if (f.next < f.succs.size()) {
        StateRef t = f.succs[f.next++];
        ++metrics_.transitions_explored;
        step(TraceEvent::edge(f.state, t));
        Color ct = color_[t.index];
        if (variant_ != Variant::Baseline && ct == Color::Cyan && (f.accepting || accepting(t))) {
          step(TraceEvent::report("cycle-blue"));
          report_blue_hit(f.state, t);
        } else if (ct == Color::White) {
          push_blue(t);
        } else if (variant_ == Variant::And && ct != Color::Red) {
          f.allred = false;
        }
      } else {
        finish_blue();
      }
    }
    metrics_.post_calls = provider_.post_calls();
    metrics_.successors_generated = provider_.successors_generated();
    metrics_.distinct_states = store_.size();
    metrics_.aux_bits_per_state = 2;
    metrics_.descriptor_bytes = store_.descriptor_bytes();
    metrics_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CheckResult result;
    result.verdict = std::move(verdict_);
    result.metrics = metrics_;
    result.weak_assumed = variant_ == Variant::Sd;
    return result;
  }

 private:
  struct Frame {
    StateRef state;
    std::vector<StateRef> succs;
    std::size_t next = 0;
    bool allred = true;
    bool accepting = false;
  };

  StateRef intern(const StateDescriptor& d) {
    auto [ref, was_new] = store_.intern(d);
    if (was_new) {
      color_.push_back(Color::White);
      acc_.push_back(provider_.acceptance(d).contains(1));
    }
    return ref;
  }

  bool accepting(StateRef s) const { return acc_[s.index]; }

  void set_color(StateRef s, Color to) {
    Color from = color_[s.index];
    color_[s.index] = to;
    step(TraceEvent::color(s, from, to));
  }

  std::vector<StateRef> expand(StateRef s) {
    auto succs = provider_.post(store_.descriptor(s));
    std::vector<StateRef> refs;
    refs.reserve(succs.size());
    for (const auto& d : succs)
      refs.push_back(intern(d));
    return refs;
  }

  // Mutations precede their events, so instrumentation always observes a
  // consistent snapshot: a state is on the path and cyan when its visit
  // event fires, and off the path when its final colour event fires.
  void push_blue(StateRef s) {
    blue_path_.push_back(s);
    color_[s.index] = Color::Cyan;
    step(TraceEvent::visit(s));
    step(TraceEvent::color(s, Color::White, Color::Cyan));
    Frame f;
    f.state = s;
    f.accepting = accepting(s);
    f.succs = expand(s);
    blue_.push_back(std::move(f));
    metrics_.max_search_depth = std::max<std::uint64_t>(metrics_.max_search_depth, blue_.size());
  }

  void finish_blue() {
    Frame f = std::move(blue_.back());
    StateRef s = f.state;
    Color final_color = Color::Blue;
    switch (variant_) {
      case Variant::Sd:
        break;
      case Variant::And:
        if (f.allred) {
          final_color = Color::Red;
        } else if (f.accepting) {
          red_dfs(s);  // s stays cyan and on the path while the red DFS runs
          if (done_)
            return;
          final_color = Color::Red;
        }
        break;
      case Variant::Baseline:
        if (f.accepting) {
          red_dfs(s);
          if (done_)
            return;
          final_color = Color::Red;
        }
        break;
    }
    blue_.pop_back();
    blue_path_.pop_back();
    set_color(s, final_color);
    if (variant_ == Variant::And && !blue_.empty() && final_color != Color::Red)
      blue_.back().allred = false;
  }

  void red_dfs(StateRef seed) {
    push_red(seed);
    while (!red_.empty() && !done_) {
      Frame& f = red_.back();
      if (f.next < f.succs.size()) {
        StateRef t = f.succs[f.next++];
        ++metrics_.transitions_explored;
        step(TraceEvent::edge(f.state, t));
        Color ct = color_[t.index];
        if (ct == Color::Cyan) {
          step(TraceEvent::report("cycle-red"));
          report_red_hit(t);
        } else if (ct == Color::Blue) {
          set_color(t, Color::Red);
          push_red(t);
        }
      } else {
        red_.pop_back();
        red_path_.pop_back();
      }
    }
    red_.clear();
    red_path_.clear();
  }

  void push_red(StateRef s) {
    Frame f;
    f.state = s;
    f.succs = expand(s);
    red_.push_back(std::move(f));
    red_path_.push_back(s);
    metrics_.max_search_depth =
        std::max<std::uint64_t>(metrics_.max_search_depth, blue_.size() + red_.size());
  }

  // Blue-DFS cyan hit on edge s -> t: t lies on the blue path, so the path
  // segment from t down to s plus the edge closes the loop.
  void report_blue_hit(StateRef s, StateRef t) {
    (void)s;
    std::size_t i = path_index(t);
    Lasso lasso;
    for (std::size_t p = 0; p <= i; ++p)
      lasso.prefix.push_back(store_.descriptor(blue_path_[p]));
    for (std::size_t p = i + 1; p < blue_path_.size(); ++p)
      lasso.loop.push_back(store_.descriptor(blue_path_[p]));
    lasso.loop.push_back(store_.descriptor(t));
    conclude(std::move(lasso));
  }

  // Red-DFS cyan hit: the loop runs from t down the blue path to the seed,
  // then along the red path to the current state, then back to t.
  void report_red_hit(StateRef t) {
    std::size_t i = path_index(t);
    Lasso lasso;
    for (std::size_t p = 0; p <= i; ++p)
      lasso.prefix.push_back(store_.descriptor(blue_path_[p]));
    for (std::size_t p = i + 1; p < blue_path_.size(); ++p)
      lasso.loop.push_back(store_.descriptor(blue_path_[p]));
    for (std::size_t p = 1; p < red_path_.size(); ++p)
      lasso.loop.push_back(store_.descriptor(red_path_[p]));
    lasso.loop.push_back(store_.descriptor(t));
    conclude(std::move(lasso));
  }

  std::size_t path_index(StateRef t) const {
    auto it = std::find(blue_path_.begin(), blue_path_.end(), t);
    if (it == blue_path_.end())
      throw InvariantViolation("cyan state not on the blue search path");
    return static_cast<std::size_t>(it - blue_path_.begin());
  }

  void conclude(Lasso lasso) {
    verdict_ = Verdict::counterexample(std::move(lasso));
    done_ = true;
  }

  void step(const TraceEvent& e) {
    if (opts_.trace)
      opts_.trace->on_event(e);
    if (opts_.on_step)
      opts_.on_step(NdfsDebugView{e, color_, blue_path_, red_path_, store_});
  }

  CountingProvider provider_;
  Variant variant_;
  const NdfsOptions& opts_;
  StateStore store_;
  std::vector<Color> color_;
  std::vector<bool> acc_;
  std::vector<Frame> blue_, red_;
  std::vector<StateRef> blue_path_, red_path_;
  Metrics metrics_;
  Verdict verdict_ = Verdict::empty();
  bool done_ = false;
};

}  // namespace

CheckResult ndfs_baseline(AutomatonProvider& p, const NdfsOptions& opts) {
  return NdfsEngine(p, Variant::Baseline, opts).run();
}

CheckResult and_check(AutomatonProvider& p, const NdfsOptions& opts) {
  return NdfsEngine(p, Variant::And, opts).run();
}

CheckResult sd_check(AutomatonProvider& p, bool weak_asserted, const NdfsOptions& opts) {
  (void)weak_asserted;  // soundness is the caller's obligation either way
  return NdfsEngine(p, Variant::Sd, opts).run();
}

}  // namespace buchi
