#pragma once

#include <cstdint>
#include <unordered_set>

#include "buchi/kripke.hpp"
#include "buchi/labeled_gba.hpp"
#include "buchi/provider.hpp"

namespace buchi {

/// Lazy synchronous product of a Kripke structure and a guarded property
/// automaton. States are (system, property) pairs encoded as 8-byte
/// descriptors; nothing is materialized up front.
///
/// Successors of (u, q): for each system edge u -> u' (outer) and each
/// property edge q -> q' (inner) whose guard holds on the labels of the
/// *target* system state u', the pair (u', q'). Acceptance of (u, q) is the
/// property automaton's acceptance of q.
class ProductProvider final : public AutomatonProvider {
 public:
  ProductProvider(const KripkeStructure& m, const LabeledGBA& a);

  StateDescriptor initial() override;
  std::vector<StateDescriptor> post(const StateDescriptor& s) override;
  AcceptanceSet acceptance(const StateDescriptor& s) override;
  std::uint32_t conditions() const override { return a_->graph.conditions; }
  std::string render(const StateDescriptor& s) const override;

  /// Distinct system states whose labels have been consulted so far.
  /// Stays proportional to the explored part, never the full system.
  std::size_t distinct_label_reads() const noexcept { return label_reads_.size(); }
  /// Candidate (system, property) successor pairs generated before guard
  /// filtering.
  std::uint64_t candidate_pairs() const noexcept { return candidate_pairs_; }

 private:
  const KripkeStructure* m_;
  const LabeledGBA* a_;
  std::unordered_set<std::uint32_t> label_reads_;
  std::uint64_t candidate_pairs_ = 0;
};

}  // namespace buchi
