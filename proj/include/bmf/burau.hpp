// Unreduced Burau representation evaluated over the prime field F_p,
// p = 2^61 - 1.  Homomorphic in the word, near-instant on long words; used
// as the probabilistic equality audit for 48-strand products.
#pragma once

#include <cstdint>
#include <vector>

#include "bmf/braid.hpp"

namespace bmf {

inline constexpr std::uint64_t kBurauPrime = (std::uint64_t{1} << 61) - 1;

struct BurauMatrix {
  int n = 0;
  std::vector<std::uint64_t> m;  // row-major n*n

  std::uint64_t& at(int r, int c) { return m[static_cast<std::size_t>(r) * n + c]; }
  std::uint64_t at(int r, int c) const {
    return m[static_cast<std::size_t>(r) * n + c];
  }
  bool operator==(const BurauMatrix&) const = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e);
std::uint64_t invmod(std::uint64_t a);

BurauMatrix burau_identity(int n);
// t must be nonzero mod p.
BurauMatrix burau_eval(const BraidWord& w, std::uint64_t t);
BurauMatrix burau_mul(const BurauMatrix& a, const BurauMatrix& b);

// Probabilistic equality: compares images at `seeds` random t values drawn
// from a deterministic generator.
bool burau_equal(const BraidWord& u, const BraidWord& v, int seeds = 3,
                 std::uint64_t salt = 0);

}  // namespace bmf
