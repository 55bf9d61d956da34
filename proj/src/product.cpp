#include "buchi/product.hpp"

#include "buchi/errors.hpp"

namespace buchi {

ProductProvider::ProductProvider(const KripkeStructure& m, const LabeledGBA& a) : m_(&m), a_(&a) {
  m.validate();
  a.validate();
}

StateDescriptor ProductProvider::initial() { return StateDescriptor::of_pair(m_->init, a_->graph.init); }

std::vector<StateDescriptor> ProductProvider::post(const StateDescriptor& s) {
  auto [u, q] = s.as_pair();
  if (u >= m_->state_count() || q >= a_->graph.state_count())
    throw ContractError("product state out of range");
  std::vector<StateDescriptor> out;
  const auto& prop_edges = a_->graph.succ[q];
  const auto& prop_guards = a_->guards[q];
  for (std::uint32_t next_u : m_->succ[u]) {
    if (prop_edges.empty())
      continue;
    const PropSet& target_labels = m_->labels[next_u];
    label_reads_.insert(next_u);
    for (std::size_t i = 0; i < prop_edges.size(); ++i) {
      ++candidate_pairs_;
      if (prop_guards[i].evaluate(target_labels))
        out.push_back(StateDescriptor::of_pair(next_u, prop_edges[i]));
    }
  }
  return out;
}

AcceptanceSet ProductProvider::acceptance(const StateDescriptor& s) {
  auto [u, q] = s.as_pair();
  (void)u;
  return a_->graph.acc.at(q);
}

std::string ProductProvider::render(const StateDescriptor& s) const {
  auto [u, q] = s.as_pair();
  return "(" + std::to_string(u) + "," + std::to_string(q) + ")";
}

}  // namespace buchi
