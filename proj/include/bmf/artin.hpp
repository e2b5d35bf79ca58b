// Artin action of B_n on the free group F_n = <x_1..x_n>.  The action is
// faithful, so equality of images is equality in B_n; this is the second,
// independent equality oracle.
//
// Convention (fixed once): sigma_i maps x_i -> x_i x_{i+1} x_i^-1 and
// x_{i+1} -> x_i, acting on the right (words apply left to right).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmf/braid.hpp"

namespace bmf {

// Reduced word in F_n: letters +g / -g for x_g / x_g^-1, 1-based.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int gen) { letters_.push_back(gen); }
  explicit FreeWord(std::vector<int> ls) {
    for (int g : ls) push(g);
  }

  void push(int g) {
    if (!letters_.empty() && letters_.back() == -g)
      letters_.pop_back();
    else
      letters_.push_back(g);
  }
  void append(const FreeWord& w) {
    for (int g : w.letters_) push(g);
  }
  void append_inverse(const FreeWord& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
      push(-*it);
  }
  FreeWord inverse() const {
    FreeWord r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(-*it);
    return r;
  }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  bool operator==(const FreeWord&) const = default;

  std::string str(const std::vector<std::string>* labels = nullptr) const;

 private:
  std::vector<int> letters_;
};

FreeWord conjugate(const FreeWord& g, const FreeWord& h);  // h^-1 g h

struct FreeGroupImage {
  int strands = 1;
  std::vector<FreeWord> images;  // images[i] = x_{i+1} . w

  bool operator==(const FreeGroupImage&) const = default;
};

FreeGroupImage artin_action(const BraidWord& w);
bool artin_equal(const BraidWord& u, const BraidWord& v);

// Image of a single generator under the action of w.
FreeWord artin_image(const FreeWord& x, const BraidWord& w);

// Structural sanity: every image is a conjugate of a generator and the
// product x_1...x_n is preserved.
bool artin_invariants_hold(const FreeGroupImage& img);

}  // namespace bmf
