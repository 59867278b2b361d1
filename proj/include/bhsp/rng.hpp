#pragma once

#include <array>
#include <cstdint>

namespace bhsp {

// xoshiro256** seeded through SplitMix64.
//
// The generator is fully specified by its integer arithmetic, so a given seed
// produces the same stream on every platform and compiler. Monte Carlo code
// derives one independent substream per sample index, which keeps results
// independent of how samples are distributed over threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  // Stream for sample `index` of a run seeded with `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index) noexcept;

  std::uint64_t next() noexcept;

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

 private:
  std::array<std::uint64_t, 4> state_{};
};

// One step of SplitMix64 (advances `state`).
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace bhsp
