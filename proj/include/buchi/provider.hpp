#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "buchi/acceptance.hpp"
#include "buchi/explicit_gba.hpp"
#include "buchi/state.hpp"

namespace buchi {

/// On-the-fly automaton interface. Successor states are computed during
/// exploration as needed; the automaton is never materialized up front.
///
/// post() must be deterministic and order-stable across calls, so that every
/// search sees the same externally fixed exploration order. acceptance() is
/// pure. A provider instance is owned by a single search at a time.
class AutomatonProvider {
 public:
  virtual ~AutomatonProvider() = default;

  virtual StateDescriptor initial() = 0;
  virtual std::vector<StateDescriptor> post(const StateDescriptor& s) = 0;
  virtual AcceptanceSet acceptance(const StateDescriptor& s) = 0;
  virtual std::uint32_t conditions() const = 0;

  /// Human-readable form of a descriptor for reports; hex bytes by default.
  virtual std::string render(const StateDescriptor& s) const;
};

/// Adapter exposing a materialized automaton through the on-the-fly
/// interface. Descriptors are the 4-byte encodings of state ids; successor
/// order is the automaton's list order.
class ExplicitProvider final : public AutomatonProvider {
 public:
  explicit ExplicitProvider(const ExplicitGBA& g) : g_(&g) {}

  StateDescriptor initial() override { return StateDescriptor::of_state(g_->init); }
  std::vector<StateDescriptor> post(const StateDescriptor& s) override;
  AcceptanceSet acceptance(const StateDescriptor& s) override { return g_->acc.at(s.as_state()); }
  std::uint32_t conditions() const override { return g_->conditions; }
  std::string render(const StateDescriptor& s) const override { return std::to_string(s.as_state()); }

  const ExplicitGBA& automaton() const { return *g_; }

 private:
  const ExplicitGBA* g_;
};

/// Wraps another provider and counts post invocations and the successor
/// states they generate — the dominant cost drivers the metrics report.
class CountingProvider final : public AutomatonProvider {
 public:
  explicit CountingProvider(AutomatonProvider& inner) : inner_(&inner) {}

  StateDescriptor initial() override { return inner_->initial(); }
  std::vector<StateDescriptor> post(const StateDescriptor& s) override {
    ++post_calls_;
    auto succs = inner_->post(s);
    successors_generated_ += succs.size();
    return succs;
  }
  AcceptanceSet acceptance(const StateDescriptor& s) override { return inner_->acceptance(s); }
  std::uint32_t conditions() const override { return inner_->conditions(); }
  std::string render(const StateDescriptor& s) const override { return inner_->render(s); }

  std::uint64_t post_calls() const noexcept { return post_calls_; }
  std::uint64_t successors_generated() const noexcept { return successors_generated_; }

  /// The wrapped provider; used where work must stay out of the counters,
  /// e.g. counterexample reconstruction after detection.
  AutomatonProvider& inner() { return *inner_; }

 private:
  AutomatonProvider* inner_;
  std::uint64_t post_calls_ = 0;
  std::uint64_t successors_generated_ = 0;
};

}  // namespace buchi
