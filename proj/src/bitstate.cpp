#include "buchi/bitstate.hpp"

#include <algorithm>
#include <chrono>

#include "buchi/errors.hpp"

namespace buchi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t bitstate_hash(const StateDescriptor& d, std::uint64_t seed) {
  std::uint64_t h = seed ^ 0xcbf29ce484222325ull;
  for (unsigned char c : d.bytes())
    h = (h ^ c) * 0x100000001b3ull;
  return splitmix64(h);
}

BitstateTable::BitstateTable(std::uint32_t bits, std::uint64_t seed) : bits_(bits), seed_(seed) {
  if (bits < 1 || bits > 40)
    throw ConfigError("bitstate table exponent must lie in [1, 40], got " + std::to_string(bits));
  words_.assign((slots() + 31) / 32, 0);  // 2 bits per slot, initially white
}

void BitstateTable::set(const StateDescriptor& d, Color c) {
  std::uint64_t slot = slot_of(d);
  std::uint64_t& word = words_[slot >> 5];
  unsigned shift = (slot & 31) * 2;
  word = (word & ~(std::uint64_t{3} << shift)) |
         (static_cast<std::uint64_t>(c) << shift);
}

std::uint64_t BitstateTable::slot_of(const StateDescriptor& d) const {
  return bitstate_hash(d, seed_) & (slots() - 1);
}

namespace {

// The two-bit nested DFS over a bitstate table. Frames carry real
// descriptors; all colour decisions go through the table, so hash collisions
// can only prune exploration or be caught by path confirmation.
class BitstateEngine {
 public:
  BitstateEngine(AutomatonProvider& p, BitstateAlgo algo, std::uint32_t bits, std::uint64_t seed,
                 const NdfsOptions& opts)
      : provider_(p), algo_(algo), table_(bits, seed), opts_(opts) {
    if (p.conditions() != 1)
      throw ContractError("bitstate mode runs two-bit searches over plain BAs (k = 1)");
  }

  CheckResult run() {
    auto start = std::chrono::steady_clock::now();
    push_blue(provider_.initial());
    while (!blue_.empty() && !done_) {
      Frame& f = blue_.back();
      if (f.next < f.succs.size()) {
        const StateDescriptor t = f.succs[f.next++];
        ++metrics_.transitions_explored;
        Color ct = table_.get(t);
        if (ct == Color::Cyan && (f.accepting || accepting(t))) {
          auto at = blue_index_of(t);
          if (at) {
            trace("cycle-blue");
            report_blue_hit(*at, t);
            continue;
          }
          // collision: the slot says cyan but the state is not on the path;
          // treat it as already seen
          if (algo_ == BitstateAlgo::And)
            f.allred = false;
        } else if (ct == Color::White) {
          push_blue(t);
        } else if (algo_ == BitstateAlgo::And && ct != Color::Red) {
          f.allred = false;
        }
      } else {
        finish_blue();
      }
    }
    metrics_.post_calls = provider_.post_calls();
    metrics_.successors_generated = provider_.successors_generated();
    metrics_.distinct_states = entered_;  // slot-distinct states entered
    metrics_.aux_bits_per_state = 2;
    metrics_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CheckResult result;
    result.verdict = std::move(verdict_);
    result.metrics = metrics_;
    result.approximate = true;
    result.weak_assumed = algo_ == BitstateAlgo::Sd;
    return result;
  }

 private:
  struct Frame {
    StateDescriptor state;
    std::vector<StateDescriptor> succs;
    std::size_t next = 0;
    bool allred = true;
    bool accepting = false;
  };

  bool accepting(const StateDescriptor& d) { return provider_.acceptance(d).contains(1); }

  void push_blue(StateDescriptor s) {
    table_.set(s, Color::Cyan);
    ++entered_;
    Frame f;
    f.state = std::move(s);
    f.accepting = accepting(f.state);
    f.succs = provider_.post(f.state);
    blue_.push_back(std::move(f));
    metrics_.max_search_depth = std::max<std::uint64_t>(metrics_.max_search_depth, blue_.size());
  }

  void finish_blue() {
    // the frame stays intact until the pop: a reporting red DFS still reads
    // the full blue path out of the frames
    Frame& f = blue_.back();
    if (algo_ == BitstateAlgo::Sd) {
      table_.set(f.state, Color::Blue);
      blue_.pop_back();
      return;
    }
    if (f.allred) {
      table_.set(f.state, Color::Red);
    } else if (f.accepting) {
      red_dfs(f.state);
      if (done_)
        return;
      table_.set(f.state, Color::Red);
    } else {
      table_.set(f.state, Color::Blue);
    }
    const StateDescriptor finished = f.state;
    blue_.pop_back();
    if (!blue_.empty() && table_.get(finished) != Color::Red)
      blue_.back().allred = false;
  }

  void red_dfs(const StateDescriptor& seed) {
    push_red(seed);
    while (!red_.empty() && !done_) {
      Frame& f = red_.back();
      if (f.next < f.succs.size()) {
        const StateDescriptor t = f.succs[f.next++];
        ++metrics_.transitions_explored;
        Color ct = table_.get(t);
        if (ct == Color::Cyan) {
          auto at = blue_index_of(t);
          if (at) {
            trace("cycle-red");
            report_red_hit(*at, t);
            continue;
          }
          // collision: skip
        } else if (ct == Color::Blue) {
          table_.set(t, Color::Red);
          push_red(t);
        }
      } else {
        red_.pop_back();
      }
    }
    red_.clear();
  }

  void push_red(const StateDescriptor& s) {
    Frame f;
    f.state = s;
    f.succs = provider_.post(s);
    red_.push_back(std::move(f));
    metrics_.max_search_depth =
        std::max<std::uint64_t>(metrics_.max_search_depth, blue_.size() + red_.size());
  }

  std::optional<std::size_t> blue_index_of(const StateDescriptor& t) const {
    for (std::size_t i = 0; i < blue_.size(); ++i)
      if (blue_[i].state == t)
        return i;
    return std::nullopt;
  }

  void report_blue_hit(std::size_t t_index, const StateDescriptor& t) {
    Lasso lasso;
    for (std::size_t p = 0; p <= t_index; ++p)
      lasso.prefix.push_back(blue_[p].state);
    for (std::size_t p = t_index + 1; p < blue_.size(); ++p)
      lasso.loop.push_back(blue_[p].state);
    lasso.loop.push_back(t);
    conclude(std::move(lasso));
  }

  void report_red_hit(std::size_t t_index, const StateDescriptor& t) {
    Lasso lasso;
    for (std::size_t p = 0; p <= t_index; ++p)
      lasso.prefix.push_back(blue_[p].state);
    for (std::size_t p = t_index + 1; p < blue_.size(); ++p)
      lasso.loop.push_back(blue_[p].state);
    for (std::size_t p = 1; p < red_.size(); ++p)
      lasso.loop.push_back(red_[p].state);
    lasso.loop.push_back(t);
    conclude(std::move(lasso));
  }

  void conclude(Lasso lasso) {
    verdict_ = Verdict::counterexample(std::move(lasso));
    done_ = true;
  }

  void trace(const char* kind) {
    if (opts_.trace)
      opts_.trace->on_event(TraceEvent::report(kind));
  }

  CountingProvider provider_;
  BitstateAlgo algo_;
  BitstateTable table_;
  const NdfsOptions& opts_;
  std::vector<Frame> blue_, red_;
  std::uint64_t entered_ = 0;
  Metrics metrics_;
  Verdict verdict_ = Verdict::empty();
  bool done_ = false;
};

}  // namespace

namespace detail {

std::uint64_t bitstate_run_seed(std::uint64_t seed, std::uint32_t run) {
  return splitmix64(seed ^ (0x5851f42d4c957f2dull * (run + 1)));
}

CheckResult bitstate_run(AutomatonProvider& p, BitstateAlgo algo, std::uint32_t bits,
                         std::uint32_t runs, std::uint64_t seed, const NdfsOptions& opts) {
  if (runs < 1)
    throw ConfigError("bitstate mode needs at least one run");
  CheckResult total;
  total.approximate = true;
  total.weak_assumed = algo == BitstateAlgo::Sd;
  for (std::uint32_t r = 0; r < runs; ++r) {
    std::uint64_t run_seed = bitstate_run_seed(seed, r);
    BitstateEngine engine(p, algo, bits, run_seed, opts);
    CheckResult one = engine.run();
    total.metrics.post_calls += one.metrics.post_calls;
    total.metrics.successors_generated += one.metrics.successors_generated;
    total.metrics.transitions_explored += one.metrics.transitions_explored;
    total.metrics.max_search_depth =
        std::max(total.metrics.max_search_depth, one.metrics.max_search_depth);
    total.metrics.distinct_states = one.metrics.distinct_states;
    total.metrics.aux_bits_per_state = one.metrics.aux_bits_per_state;
    total.metrics.wall_seconds += one.metrics.wall_seconds;
    if (!one.verdict.is_empty()) {
      total.verdict = std::move(one.verdict);
      break;
    }
  }
  return total;
}

}  // namespace detail

CheckResult bitstate_check(AutomatonProvider& p, BitstateAlgo algo, std::uint32_t bits,
                           std::uint32_t runs, std::uint64_t seed, const NdfsOptions& opts) {
  if (bits < 10 || bits > 40)
    throw ConfigError("bitstate table exponent must lie in [10, 40], got " + std::to_string(bits));
  return detail::bitstate_run(p, algo, bits, runs, seed, opts);
}

}  // namespace buchi
