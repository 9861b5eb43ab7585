#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mlt {

// Deterministic random stream. mt19937_64 output is pinned by the standard,
// and sampling below avoids distribution objects, whose output is not,
// so identical seeds give identical results on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t cut = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t v = next();
      if (v >= cut) return v % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::mt19937_64 gen_;
};

inline const char* rng_name() { return "mt19937_64"; }

}  // namespace mlt
