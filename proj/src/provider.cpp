#include "buchi/provider.hpp"

namespace buchi {

std::string AutomatonProvider::render(const StateDescriptor& s) const {
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(s.size() * 2);
  for (unsigned char c : s.bytes()) {
    out.push_back(hex[c >> 4]);
    out.push_back(hex[c & 0xf]);
  }
  return out;
}

std::vector<StateDescriptor> ExplicitProvider::post(const StateDescriptor& s) {
  const auto& targets = g_->succ.at(s.as_state());
  std::vector<StateDescriptor> out;
  out.reserve(targets.size());
  for (std::uint32_t t : targets)
    out.push_back(StateDescriptor::of_state(t));
  return out;
}

}  // namespace buchi
