// Classical Garside normal form for B_n (halftwist Delta structure,
// left-greedy canonical factors).  Two words are equal in B_n iff their
// normal forms are identical; this is the exact equality oracle.
#pragma once

#include <vector>

#include "bmf/braid.hpp"

namespace bmf {

// A permutation braid stored as its underlying permutation:
// p[i] = end position of the strand starting at position i (0-based).
using PermBraid = std::vector<int>;

struct GarsideNormalForm {
  int strands = 1;
  long long delta_power = 0;
  std::vector<PermBraid> canonical_factors;  // left-greedy, none id or Delta

  bool operator==(const GarsideNormalForm&) const = default;
  std::size_t canonical_length() const { return canonical_factors.size(); }
};

GarsideNormalForm normal_form(const BraidWord& w);
bool nf_equal(const BraidWord& u, const BraidWord& v);

// Resynthesizes a word representing the same group element.
BraidWord nf_to_word(const GarsideNormalForm& nf);

namespace garside_detail {
PermBraid delta_perm(int n);
bool is_identity(const PermBraid& p);
// Starting set: generators sigma_i that left-divide the factor.
std::vector<int> starting_set(const PermBraid& p);
// true if anything moved between the factors.
bool make_left_weighted(PermBraid& a, PermBraid& b);
PermBraid tau(const PermBraid& p);  // Delta-conjugation flip
}  // namespace garside_detail

}  // namespace bmf
