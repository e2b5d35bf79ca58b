#include "bmf/burau.hpp"

#include <random>
#include <stdexcept>

namespace bmf {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kBurauPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  while (r >= kBurauPrime) r -= kBurauPrime;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kBurauPrime - 2); }

BurauMatrix burau_identity(int n) {
  BurauMatrix m;
  m.n = n;
  m.m.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BurauMatrix burau_eval(const BraidWord& w, std::uint64_t t) {
  t %= kBurauPrime;
  if (t == 0) throw std::invalid_argument("burau parameter must be nonzero");
  const int n = w.strands();
  BurauMatrix M = burau_identity(n);
  const std::uint64_t tinv = invmod(t);
  const std::uint64_t one_minus_t = (kBurauPrime + 1 - t) % kBurauPrime;
  const std::uint64_t one_minus_tinv = (kBurauPrime + 1 - tinv) % kBurauPrime;
  // Right-multiplication by the elementary Burau block updates two columns.
  for (int g : w.letters()) {
    const int k = std::abs(g) - 1;
    for (int r = 0; r < n; ++r) {
      const std::uint64_t a = M.at(r, k), b = M.at(r, k + 1);
      if (g > 0) {
        // columns (k,k+1) <- (a(1-t)+b, a t)
        std::uint64_t c0 = mulmod(a, one_minus_t) + b;
        if (c0 >= kBurauPrime) c0 -= kBurauPrime;
        M.at(r, k) = c0;
        M.at(r, k + 1) = mulmod(a, t);
      } else {
        // inverse block [[0,1],[t^-1, 1-t^-1]]
        std::uint64_t c0 = mulmod(b, tinv);
        std::uint64_t c1 = a + mulmod(b, one_minus_tinv);
        if (c1 >= kBurauPrime) c1 -= kBurauPrime;
        M.at(r, k) = c0;
        M.at(r, k + 1) = c1;
      }
    }
  }
  return M;
}

BurauMatrix burau_mul(const BurauMatrix& a, const BurauMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  const int n = a.n;
  BurauMatrix r;
  r.n = n;
  r.m.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < n; ++j) {
        std::uint64_t v = r.at(i, j) + mulmod(aik, b.at(k, j));
        if (v >= kBurauPrime) v -= kBurauPrime;
        r.at(i, j) = v;
      }
    }
  return r;
}

bool burau_equal(const BraidWord& u, const BraidWord& v, int seeds,
                 std::uint64_t salt) {
  if (u.strands() != v.strands())
    throw AmbientMismatch("strand count mismatch in equality check");
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ salt);
  std::uniform_int_distribution<std::uint64_t> dist(2, kBurauPrime - 2);
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t t = dist(rng);
    if (!(burau_eval(u, t) == burau_eval(v, t))) return false;
  }
  return true;
}

}  // namespace bmf
