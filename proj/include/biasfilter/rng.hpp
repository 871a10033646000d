#pragma once

#include <cstdint>

namespace biasfilter {

/**
 * Deterministic random stream (SplitMix64).
 *
 * Every draw in the decoding pipeline flows through one of these; there is no
 * ambient entropy anywhere. Streams are value types: copying one forks the
 * sequence at its current point.
 */
class RandomStream {
 public:
  explicit RandomStream(uint64_t state) : state_(state) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

namespace detail {
inline uint64_t mix64(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 0x632BE59BD9B4E019ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/**
 * Derive the random stream for one candidate expansion.
 *
 * Pure function of its inputs: the same tuple always yields the same stream,
 * distinct tuples yield independent streams. This is what makes parallel and
 * serial expansion produce identical samples.
 */
inline RandomStream child_rng(uint64_t seed, uint64_t prompt_id, uint32_t segment_index,
                              uint32_t parent_index, uint32_t child_index) {
  uint64_t h = detail::mix64(seed, 0x42696173ULL);  // domain tag
  h = detail::mix64(h, prompt_id);
  h = detail::mix64(h, segment_index);
  h = detail::mix64(h, parent_index);
  h = detail::mix64(h, child_index);
  return RandomStream(h);
}

}  // namespace biasfilter
