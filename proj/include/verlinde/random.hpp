#pragma once

#include <cstdint>
#include <random>

namespace verlinde {

/// Default coefficient bound: random integers are drawn uniformly from [-B, B].
inline constexpr long kDefaultCoefficientBound = 50;

/// splitmix64 finalizer, used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for (root, stream, index). Per-case seeds never depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index = 0) {
  return mix_seed(mix_seed(mix_seed(root) ^ stream) ^ index);
}

/// Seeded generator with a portable bounded draw (std distributions differ across
/// standard libraries, which would break byte-identical output).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  /// Uniform integer in [lo, hi], by rejection sampling.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  long coefficient(long bound = kDefaultCoefficientBound) { return uniform(-bound, bound); }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace verlinde
