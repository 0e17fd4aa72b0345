#pragma once

#include <cstdint>

namespace pld {

// Counter-based generator: every output is a pure function of (seed, counter),
// so trial streams can be partitioned across workers and replayed exactly on
// any platform. The mixer is the SplitMix64 finalizer.
inline std::uint64_t mix_counter(std::uint64_t seed, std::uint64_t counter) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) noexcept {
  return static_cast<double>(mix_counter(seed, counter) >> 11) * 0x1.0p-53;
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0) noexcept
      : seed_(seed), counter_(start) {}

  std::uint64_t next_u64() noexcept { return mix_counter(seed_, counter_++); }
  double next_double() noexcept { return uniform01(seed_, counter_++); }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace pld
