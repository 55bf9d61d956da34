#pragma once

#include <cstdint>
#include <vector>

#include "buchi/check_result.hpp"
#include "buchi/ndfs.hpp"
#include "buchi/provider.hpp"

namespace buchi {

/// Two bits of colour per slot over 2^bits slots, addressed by a seeded hash
/// of the state descriptor. Only the auxiliary colour is stored; descriptors
/// are not, so distinct states may share a slot.
class BitstateTable {
 public:
  /// bits in [1, 40]; checks that publish the table enforce the tighter
  /// configuration range themselves.
  BitstateTable(std::uint32_t bits, std::uint64_t seed);

  Color get(const StateDescriptor& d) const { return color_at(slot_of(d)); }
  void set(const StateDescriptor& d, Color c);

  std::uint64_t slot_of(const StateDescriptor& d) const;
  std::uint32_t bits() const noexcept { return bits_; }
  std::uint64_t slots() const noexcept { return std::uint64_t{1} << bits_; }

 private:
  Color color_at(std::uint64_t slot) const {
    return static_cast<Color>((words_[slot >> 5] >> ((slot & 31) * 2)) & 3);
  }

  std::uint32_t bits_;
  std::uint64_t seed_;
  std::vector<std::uint64_t> words_;
};

/// Seeded 64-bit descriptor hash used by the bitstate table.
std::uint64_t bitstate_hash(const StateDescriptor& d, std::uint64_t seed);

enum class BitstateAlgo { And, Sd };

/// Approximate emptiness check: runs the chosen two-bit search with colours
/// kept in a bitstate table instead of per-state storage. The search path
/// keeps real descriptors, and a cyan table hit is confirmed against them
/// before reporting, so counterexamples are always genuine; Empty verdicts
/// are only "probably empty". With runs > 1 the test is repeated with
/// independently seeded hashes and reports a counterexample if any run finds
/// one. bits must lie in [10, 40] (ConfigError otherwise); requires k = 1.
CheckResult bitstate_check(AutomatonProvider& p, BitstateAlgo algo, std::uint32_t bits,
                           std::uint32_t runs, std::uint64_t seed, const NdfsOptions& opts = {});

namespace detail {

/// bitstate_check without the [10, 40] configuration gate; tiny tables force
/// collisions for tests.
CheckResult bitstate_run(AutomatonProvider& p, BitstateAlgo algo, std::uint32_t bits,
                         std::uint32_t runs, std::uint64_t seed, const NdfsOptions& opts = {});

/// Hash seed used by run number `run` (0-based) for a given check seed.
std::uint64_t bitstate_run_seed(std::uint64_t seed, std::uint32_t run);

}  // namespace detail

}  // namespace buchi
