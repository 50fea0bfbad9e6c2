// Deterministic random primitives.  std::uniform_real_distribution and
// std::shuffle are implementation-defined, so fits that must be
// bit-reproducible draw through these instead.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cadorder {

class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits.
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform in [0, n).
  size_t next_index(size_t n) { return static_cast<size_t>(gen_() % n); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[next_index(i)]);
  }

  // Deterministic derived stream, e.g. one child per grid point.
  Rng child(uint64_t stream) const {
    uint64_t x = seed_ + 0x9e3779b97f4a7c15ull * (stream + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return Rng(x ^ (x >> 31));
  }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace cadorder
