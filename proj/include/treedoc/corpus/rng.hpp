// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_CORPUS_RNG_HPP
#define TREEDOC_CORPUS_RNG_HPP

#include <cstdint>
#include <span>
#include <utility>

namespace treedoc::corpus {

// SplitMix64 (Steele, Lea and Flood 2014). Every generator in this library
// draws from it so that corpora are reproducible across platforms and
// implementations: the state advances by 0x9e3779b97f4a7c15 per draw and
// each output is the state passed through the finalizer below. Bounded
// draws use the high half of a 128-bit product (no modulo bias worth
// measuring at these ranges, and fully deterministic).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return finalize(state_);
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  const T& pick(std::span<const T> items) {
    return items[below(items.size())];
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Independent stream for item `index` of a batch seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::finalize(seed ^ SplitMix64::finalize(index + 0x632be59bd9b4e019ULL));
}

}  // namespace treedoc::corpus

#endif  // TREEDOC_CORPUS_RNG_HPP
