#pragma once

#include <cstdint>
#include <string>

#include "buchi/errors.hpp"

namespace buchi {

/// Set of acceptance condition indices from {1..k}, stored as one bit word so
/// that unions during SCC merging are single instructions. k = 1 models a
/// plain Büchi automaton; k = 0 is legal and denotes the empty condition set.
class AcceptanceSet {
 public:
  static constexpr std::uint32_t kMaxConditions = 64;

  constexpr AcceptanceSet() = default;

  /// The full set {1..k}.
  static constexpr AcceptanceSet all(std::uint32_t k) {
    AcceptanceSet s;
    s.bits_ = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    return s;
  }

  void insert(std::uint32_t j) {
    check_index(j);
    bits_ |= std::uint64_t{1} << (j - 1);
  }

  bool contains(std::uint32_t j) const {
    check_index(j);
    return (bits_ >> (j - 1)) & 1;
  }

  constexpr bool empty() const noexcept { return bits_ == 0; }

  constexpr AcceptanceSet& operator|=(AcceptanceSet other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr AcceptanceSet operator|(AcceptanceSet a, AcceptanceSet b) noexcept {
    return a |= b;
  }

  constexpr bool operator==(const AcceptanceSet&) const = default;

  constexpr std::uint64_t bits() const noexcept { return bits_; }

  /// Comma-joined indices, "-" when empty. Used by the trace format.
  std::string to_string() const {
    if (bits_ == 0)
      return "-";
    std::string out;
    for (std::uint32_t j = 1; j <= kMaxConditions; ++j) {
      if ((bits_ >> (j - 1)) & 1) {
        if (!out.empty())
          out += ',';
        out += std::to_string(j);
      }
    }
    return out;
  }

 private:
  static void check_index(std::uint32_t j) {
    if (j == 0 || j > kMaxConditions)
      throw ContractError("acceptance condition index out of range: " + std::to_string(j));
  }

  std::uint64_t bits_ = 0;
};

}  // namespace buchi
