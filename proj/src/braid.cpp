#include "bmf/braid.hpp"

#include <numeric>

namespace bmf {

BraidWord BraidWord::pow(int k) const {
  BraidWord r(strands_);
  if (k == 0) return r;
  const BraidWord base = k > 0 ? *this : inverse();
  for (int i = 0; i < std::abs(k); ++i) r.append(base);
  return r;
}

std::string BraidWord::str() const {
  std::string s;
  for (int g : letters_) {
    if (!s.empty()) s += ' ';
    s += (g > 0 ? "s" : "s-");
    s += std::to_string(std::abs(g));
  }
  return s.empty() ? "e" : s;
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
  BraidWord r = u;
  r.append(v);
  return r;
}

BraidWord compose(const std::vector<BraidWord>& words) {
  if (words.empty()) throw std::invalid_argument("empty composition");
  BraidWord r = words.front();
  for (std::size_t i = 1; i < words.size(); ++i) r.append(words[i]);
  return r;
}

BraidWord conjugate(const BraidWord& g, const BraidWord& h) {
  if (g.strands() != h.strands())
    throw AmbientMismatch("strand count mismatch in conjugation");
  BraidWord r = h.inverse();
  r.append(g);
  r.append(h);
  return r;
}

std::vector<int> permutation(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  // p maps start position to current position; letters act left to right.
  std::vector<int> at(n);  // at[pos] = strand currently at pos
  std::iota(at.begin(), at.end(), 0);
  for (int g : w.letters()) {
    const int i = std::abs(g) - 1;
    std::swap(at[i], at[i + 1]);
  }
  for (int pos = 0; pos < n; ++pos) p[at[pos]] = pos;
  return p;
}

bool is_pure(const BraidWord& w) {
  auto p = permutation(w);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int g : w.letters()) s += g > 0 ? 1 : -1;
  return s;
}

BraidWord full_twist(int n) {
  BraidWord r(n);
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i < n; ++i) r.push(i);
  return r;
}

BraidWord half_twist_word(int n) {
  // Delta = (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1} ... sigma_1)
  BraidWord r(n);
  for (int k = 1; k < n; ++k)
    for (int i = k; i >= 1; --i) r.push(i);
  return r;
}

BraidWord delete_strands(const BraidWord& w, const std::vector<int>& starts) {
  const int n = w.strands();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);  // by position
  int removed = 0;
  for (int s : starts) {
    if (s < 1 || s > n) throw std::invalid_argument("position out of range");
    if (!gone[static_cast<std::size_t>(s - 1)]) {
      gone[static_cast<std::size_t>(s - 1)] = 1;
      ++removed;
    }
  }
  BraidWord r(n - removed);
  for (int g : w.letters()) {
    const int i = std::abs(g) - 1;  // 0-based left position of the crossing
    const bool a = gone[static_cast<std::size_t>(i)];
    const bool b = gone[static_cast<std::size_t>(i + 1)];
    if (!a && !b) {
      int kept_before = 0;
      for (int p = 0; p < i; ++p)
        if (!gone[static_cast<std::size_t>(p)]) ++kept_before;
      r.push(g > 0 ? kept_before + 1 : -(kept_before + 1));
    }
    std::swap(gone[static_cast<std::size_t>(i)],
              gone[static_cast<std::size_t>(i + 1)]);
  }
  return r;
}

}  // namespace bmf
