#pragma once

#include <cstdint>

namespace tautint::detail {

// splitmix64: tiny, seedable, identical on every platform. Used wherever
// reproducible random cases are needed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long below(long n) {
    return static_cast<long>(next() % static_cast<std::uint64_t>(n));
  }

  // inclusive bounds
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }

  long nonzero(long magnitude) {
    const long v = range(1, magnitude);
    return next() % 2 == 0 ? v : -v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace tautint::detail
