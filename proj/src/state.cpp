#include "buchi/state.hpp"

#include "buchi/errors.hpp"

namespace buchi {

namespace {

void put_u32_be(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

std::uint32_t get_u32_be(const std::string& s, std::size_t at) {
  auto b = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + i])); };
  return (b(0) << 24) | (b(1) << 16) | (b(2) << 8) | b(3);
}

}  // namespace

StateDescriptor StateDescriptor::of_state(std::uint32_t id) {
  std::string bytes;
  bytes.reserve(4);
  put_u32_be(bytes, id);
  return StateDescriptor(std::move(bytes));
}

StateDescriptor StateDescriptor::of_pair(std::uint32_t a, std::uint32_t b) {
  std::string bytes;
  bytes.reserve(8);
  put_u32_be(bytes, a);
  put_u32_be(bytes, b);
  return StateDescriptor(std::move(bytes));
}

std::uint32_t StateDescriptor::as_state() const {
  if (bytes_.size() != 4)
    throw ContractError("descriptor is not a single-state encoding");
  return get_u32_be(bytes_, 0);
}

std::pair<std::uint32_t, std::uint32_t> StateDescriptor::as_pair() const {
  if (bytes_.size() != 8)
    throw ContractError("descriptor is not a state-pair encoding");
  return {get_u32_be(bytes_, 0), get_u32_be(bytes_, 4)};
}

std::pair<StateRef, bool> StateStore::intern(const StateDescriptor& d) {
  auto it = index_.find(d);
  if (it != index_.end())
    return {StateRef(it->second), false};
  if (by_ref_.size() >= capacity_)
    throw CapacityError("state store capacity exhausted (" + std::to_string(capacity_) + " states)");
  auto next = static_cast<std::uint32_t>(by_ref_.size());
  auto [pos, inserted] = index_.emplace(d, next);
  (void)inserted;
  by_ref_.push_back(&pos->first);
  descriptor_bytes_ += d.size();
  return {StateRef(next), true};
}

std::optional<StateRef> StateStore::find(const StateDescriptor& d) const {
  auto it = index_.find(d);
  if (it == index_.end())
    return std::nullopt;
  return StateRef(it->second);
}

}  // namespace buchi
