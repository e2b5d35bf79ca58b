#include "bmf/garside.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace bmf {
namespace garside_detail {

PermBraid delta_perm(int n) {
  PermBraid p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

bool is_identity(const PermBraid& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

static bool is_delta(const PermBraid& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    if (p[i] != n - 1 - i) return false;
  return true;
}

std::vector<int> starting_set(const PermBraid& p) {
  std::vector<int> s;
  for (int i = 1; i < static_cast<int>(p.size()); ++i)
    if (p[i - 1] > p[i]) s.push_back(i);
  return s;
}

PermBraid tau(const PermBraid& p) {
  const int n = static_cast<int>(p.size());
  PermBraid q(n);
  for (int i = 0; i < n; ++i) q[i] = n - 1 - p[n - 1 - i];
  return q;
}

bool make_left_weighted(PermBraid& a, PermBraid& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> a_inv(n);
  for (int i = 0; i < n; ++i) a_inv[a[i]] = i;
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      // sigma_i heads b and can be absorbed at the tail of a.
      if (b[i - 1] > b[i] && a_inv[i - 1] < a_inv[i]) {
        std::swap(a[a_inv[i - 1]], a[a_inv[i]]);  // a := a * sigma_i
        std::swap(a_inv[i - 1], a_inv[i]);
        std::swap(b[i - 1], b[i]);  // b := sigma_i^-1 * b
        moved = changed = true;
      }
    }
  }
  return changed;
}

}  // namespace garside_detail

using namespace garside_detail;

namespace {

struct Chain {
  long long dpow = 0;
  std::vector<PermBraid> fs;
};

// Restores the left-weighted condition on a concatenation of two chains that
// were each already normal; changes cascade out from the junction.
void normalize(std::vector<PermBraid>& fs, std::size_t junction) {
  if (fs.size() < 2) return;
  std::deque<std::size_t> work;
  const auto push = [&](std::size_t i) {
    if (i + 1 < fs.size()) work.push_back(i);
  };
  if (junction > 0) push(junction - 1);
  push(junction);
  std::vector<char> queued(fs.size(), 0);
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    if (i + 1 >= fs.size()) continue;
    if (make_left_weighted(fs[i], fs[i + 1])) {
      if (i > 0) work.push_back(i - 1);
      work.push_back(i);
      push(i + 1);
    }
  }
  (void)queued;
}

Chain merge(const Chain& a, Chain b, int n) {
  Chain r;
  r.dpow = a.dpow + b.dpow;
  r.fs.reserve(a.fs.size() + b.fs.size());
  const bool flip = (b.dpow % 2) != 0;
  for (const auto& f : a.fs) r.fs.push_back(flip ? tau(f) : f);
  const std::size_t junction = r.fs.empty() ? 0 : r.fs.size() - 1;
  for (auto& f : b.fs) r.fs.push_back(std::move(f));
  normalize(r.fs, junction);
  // Deltas collect at the front, identities at the back.
  std::size_t lead = 0;
  while (lead < r.fs.size() && is_delta(r.fs[lead])) ++lead;
  if (lead > 0) {
    r.dpow += static_cast<long long>(lead);
    r.fs.erase(r.fs.begin(), r.fs.begin() + static_cast<long>(lead));
  }
  while (!r.fs.empty() && is_identity(r.fs.back())) r.fs.pop_back();
  (void)n;
  return r;
}

Chain of_letters(const std::vector<int>& letters, std::size_t lo, std::size_t hi,
                 int n) {
  if (hi - lo == 0) return {};
  if (hi - lo == 1) {
    const int g = letters[lo];
    const int i = std::abs(g);
    Chain c;
    if (g > 0) {
      PermBraid p(n);
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[i - 1], p[i]);
      c.fs.push_back(std::move(p));
    } else {
      // sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1)
      PermBraid p = delta_perm(n);
      std::swap(p[p.size() - 1 - static_cast<std::size_t>(i)],
                p[p.size() - static_cast<std::size_t>(i)]);
      // p = tau_i o Delta computed on outputs:
      // Delta[x] = n-1-x; swapping outputs i-1, i means swapping the inputs
      // that map there, i.e. positions n-1-(i-1) and n-1-i.
      c.dpow = -1;
      c.fs.push_back(std::move(p));
    }
    if (is_delta(c.fs.front())) {
      c.dpow += 1;
      c.fs.clear();
    } else if (is_identity(c.fs.front())) {
      c.fs.clear();
    }
    return c;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  Chain a = of_letters(letters, lo, mid, n);
  Chain b = of_letters(letters, mid, hi, n);
  return merge(a, std::move(b), n);
}

}  // namespace

GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  Chain c = of_letters(w.letters(), 0, w.letters().size(), n);
  GarsideNormalForm nf;
  nf.strands = n;
  nf.delta_power = c.dpow;
  nf.canonical_factors = std::move(c.fs);
  return nf;
}

bool nf_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw AmbientMismatch("strand count mismatch in equality check");
  return normal_form(u) == normal_form(v);
}

BraidWord nf_to_word(const GarsideNormalForm& nf) {
  const int n = nf.strands;
  BraidWord w(n);
  BraidWord delta = half_twist_word(n);
  w.append(delta.pow(static_cast<int>(nf.delta_power)));
  for (const auto& f : nf.canonical_factors) {
    PermBraid p = f;
    bool any = true;
    while (any) {
      any = false;
      for (int i = 1; i < n; ++i) {
        if (p[i - 1] > p[i]) {  // sigma_i heads p
          w.push(i);
          std::swap(p[i - 1], p[i]);
          any = true;
          break;
        }
      }
    }
  }
  return w;
}

}  // namespace bmf
