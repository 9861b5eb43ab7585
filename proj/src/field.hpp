#pragma once

#include <cstdint>

#include "errors.hpp"

namespace mlt {

// Residues are kept reduced into [0, p).
using Residue = std::uint32_t;

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// The prime field GF(p). All arithmetic is exact.
struct FieldSpec {
  std::uint64_t p;

  explicit FieldSpec(std::uint64_t modulus) : p(modulus) {
    if (modulus > (std::uint64_t{1} << 31))
      throw InputError("field modulus " + std::to_string(modulus) +
                       " is too large (limit 2^31)");
    if (!is_prime(modulus))
      throw InputError("field modulus " + std::to_string(modulus) +
                       " is not prime");
  }

  Residue add(Residue a, Residue b) const {
    return Residue((std::uint64_t{a} + b) % p);
  }
  Residue sub(Residue a, Residue b) const {
    return Residue((std::uint64_t{a} + p - b) % p);
  }
  Residue mul(Residue a, Residue b) const {
    return Residue(std::uint64_t{a} * b % p);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : Residue(p - a); }

  // Multiplicative inverse via the extended Euclid run. a must be nonzero.
  Residue inv(Residue a) const {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = std::int64_t(p), nr = std::int64_t(a);
    while (nr != 0) {
      const std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += std::int64_t(p);
    return Residue(t);
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace mlt
