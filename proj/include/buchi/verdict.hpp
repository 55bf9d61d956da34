#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "buchi/state.hpp"

namespace buchi {

/// Finite representation of an accepting run: a prefix from the initial state
/// followed by a loop. Consecutive states are edges, the last prefix state has
/// an edge to the first loop state, and the last loop state has an edge back
/// to the first loop state. For each condition j, some loop state is in A_j.
struct Lasso {
  std::vector<StateDescriptor> prefix;
  std::vector<StateDescriptor> loop;
};

/// Outcome of an emptiness check: Empty, or a counterexample lasso.
class Verdict {
 public:
  static Verdict empty() { return Verdict(); }
  static Verdict counterexample(Lasso l) {
    Verdict v;
    v.lasso_ = std::move(l);
    return v;
  }

  bool is_empty() const noexcept { return !lasso_.has_value(); }
  const Lasso* lasso() const noexcept { return lasso_ ? &*lasso_ : nullptr; }

 private:
  std::optional<Lasso> lasso_;
};

}  // namespace buchi
