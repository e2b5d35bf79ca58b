#include "bmf/artin.hpp"

namespace bmf {

std::string FreeWord::str(const std::vector<std::string>* labels) const {
  std::string s;
  for (int g : letters_) {
    if (!s.empty()) s += ' ';
    const int idx = std::abs(g);
    if (labels)
      s += (*labels)[static_cast<std::size_t>(idx - 1)];
    else
      s += "x" + std::to_string(idx);
    if (g < 0) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

FreeWord conjugate(const FreeWord& g, const FreeWord& h) {
  FreeWord r = h.inverse();
  r.append(g);
  r.append(h);
  return r;
}

// Images are built from the suffix side: if psi holds x_j . v for the suffix
// v, then prepending a letter g rewrites only the two slots g touches:
//   x_k . (sigma_k v)     = psi(x_k) psi(x_{k+1}) psi(x_k)^-1
//   x_{k+1} . (sigma_k v) = psi(x_k)
// and for the inverse letter x_k . v', x_{k+1}^-1 x_k x_{k+1} . v'.
FreeGroupImage artin_action(const BraidWord& w) {
  const int n = w.strands();
  FreeGroupImage img;
  img.strands = n;
  img.images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img.images.emplace_back(i);
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const int g = *it;
    const int k = std::abs(g) - 1;
    FreeWord& a = img.images[static_cast<std::size_t>(k)];
    FreeWord& b = img.images[static_cast<std::size_t>(k + 1)];
    if (g > 0) {
      FreeWord na = a;
      na.append(b);
      na.append_inverse(a);
      b = a;
      a = std::move(na);
    } else {
      FreeWord nb = b.inverse();
      nb.append(a);
      nb.append(b);
      a = b;
      b = std::move(nb);
    }
  }
  return img;
}

bool artin_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw AmbientMismatch("strand count mismatch in equality check");
  return artin_action(u) == artin_action(v);
}

FreeWord artin_image(const FreeWord& x, const BraidWord& w) {
  FreeGroupImage img = artin_action(w);
  FreeWord r;
  for (int g : x.letters()) {
    const auto& im = img.images[static_cast<std::size_t>(std::abs(g) - 1)];
    if (g > 0)
      r.append(im);
    else
      r.append_inverse(im);
  }
  return r;
}

bool artin_invariants_hold(const FreeGroupImage& img) {
  FreeWord prod, expect;
  for (int i = 1; i <= img.strands; ++i) {
    prod.append(img.images[static_cast<std::size_t>(i - 1)]);
    expect.push(i);
  }
  if (!(prod == expect)) return false;
  for (const auto& im : img.images) {
    const auto& ls = im.letters();
    if (ls.empty() || ls.size() % 2 == 0) return false;
    const std::size_t mid = ls.size() / 2;
    if (ls[mid] < 0) return false;
    for (std::size_t i = 0; i < mid; ++i)
      if (ls[i] != -ls[ls.size() - 1 - i]) return false;
  }
  return true;
}

}  // namespace bmf
