#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace buchi {

/// Opaque state identity: an arbitrary byte sequence. Two descriptors denote
/// the same state iff their bytes are equal.
class StateDescriptor {
 public:
  StateDescriptor() = default;
  explicit StateDescriptor(std::string bytes) : bytes_(std::move(bytes)) {}

  /// Fixed-width big-endian encoding of a single state id.
  static StateDescriptor of_state(std::uint32_t id);
  /// Fixed-width big-endian encoding of a (system, property) state pair.
  static StateDescriptor of_pair(std::uint32_t a, std::uint32_t b);

  /// Decodes of_state(); the descriptor must be 4 bytes long.
  std::uint32_t as_state() const;
  /// Decodes of_pair(); the descriptor must be 8 bytes long.
  std::pair<std::uint32_t, std::uint32_t> as_pair() const;

  const std::string& bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

  bool operator==(const StateDescriptor&) const = default;

 private:
  std::string bytes_;
};

struct DescriptorHash {
  std::size_t operator()(const StateDescriptor& d) const noexcept {
    return std::hash<std::string>{}(d.bytes());
  }
};

/// Dense index handed out by StateStore, assigned in first-seen order.
/// Auxiliary per-state tables are vectors indexed by it.
struct StateRef {
  std::uint32_t index = std::numeric_limits<std::uint32_t>::max();

  constexpr StateRef() = default;
  constexpr explicit StateRef(std::uint32_t i) : index(i) {}

  constexpr bool valid() const noexcept {
    return index != std::numeric_limits<std::uint32_t>::max();
  }
  constexpr bool operator==(const StateRef&) const = default;
  constexpr auto operator<=>(const StateRef&) const = default;
};

/// Interns descriptors into dense StateRef indices. Single-writer: one search
/// owns one store at a time.
class StateStore {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 31;

  explicit StateStore(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

  /// Returns the ref for the descriptor and whether this was its first sighting.
  /// Throws CapacityError once `capacity` distinct descriptors are stored.
  std::pair<StateRef, bool> intern(const StateDescriptor& d);

  /// Ref for an already-interned descriptor, or nullopt.
  std::optional<StateRef> find(const StateDescriptor& d) const;

  const StateDescriptor& descriptor(StateRef r) const { return *by_ref_.at(r.index); }

  std::size_t size() const noexcept { return by_ref_.size(); }

  /// Total bytes of all stored descriptors.
  std::uint64_t descriptor_bytes() const noexcept { return descriptor_bytes_; }

 private:
  std::size_t capacity_;
  std::unordered_map<StateDescriptor, std::uint32_t, DescriptorHash> index_;
  std::vector<const StateDescriptor*> by_ref_;
  std::uint64_t descriptor_bytes_ = 0;
};

}  // namespace buchi
