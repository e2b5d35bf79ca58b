// Braid words over B_n: signed Artin generators, composition with free
// reduction, permutation / exponent-sum homomorphisms, full twists.
//
// Conventions used throughout the library:
//   * strands / punctures are numbered 1..n left to right on the real axis;
//   * letter +i is the counterclockwise halftwist sigma_i exchanging
//     punctures i and i+1 (the left puncture dives below the axis);
//   * words act on the right, products read left to right;
//   * conjugation is a^b = b^-1 a b.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmf {

struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands) : strands_(check_strands(strands)) {}
  BraidWord(int strands, std::vector<int> letters)
      : strands_(check_strands(strands)), letters_(std::move(letters)) {
    for (int g : letters_) {
      if (g == 0 || std::abs(g) >= strands_)
        throw std::invalid_argument("generator index out of range");
    }
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool is_identity_word() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Appends one letter, cancelling an adjacent inverse pair.
  void push(int g) {
    if (g == 0 || std::abs(g) >= strands_)
      throw std::invalid_argument("generator index out of range");
    if (!letters_.empty() && letters_.back() == -g)
      letters_.pop_back();
    else
      letters_.push_back(g);
  }
  void append(const BraidWord& w) {
    if (w.strands_ != strands_)
      throw AmbientMismatch("strand count mismatch in composition");
    for (int g : w.letters_) push(g);
  }

  BraidWord inverse() const {
    BraidWord r(strands_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(-*it);
    return r;
  }

  BraidWord pow(int k) const;

  std::string str() const;

 private:
  static int check_strands(int n) {
    if (n < 1) throw std::invalid_argument("strand count must be positive");
    return n;
  }
  int strands_ = 1;
  std::vector<int> letters_;
};

BraidWord compose(const std::vector<BraidWord>& words);
BraidWord compose(const BraidWord& u, const BraidWord& v);
// h^-1 g h, returned verbatim (free reduction at the seams only).
BraidWord conjugate(const BraidWord& g, const BraidWord& h);

// Underlying motion of the punctures: perm[i] = end position of the strand
// starting at position i (0-based internally).
std::vector<int> permutation(const BraidWord& w);
bool is_pure(const BraidWord& w);

long long exponent_sum(const BraidWord& w);

// The central full twist Delta^2_n = (sigma_1 ... sigma_{n-1})^n.
BraidWord full_twist(int n);
// Garside halftwist Delta_n as a word.
BraidWord half_twist_word(int n);

// Forgets the strands starting at the given 1-based positions (the induced
// map of punctured-disk mapping classes; crossings touching a forgotten
// strand disappear).
BraidWord delete_strands(const BraidWord& w, const std::vector<int>& starts);

}  // namespace bmf
