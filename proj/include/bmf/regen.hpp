// The regeneration calculus: puncture doubling, the three regeneration
// rules as factor rewrites, and the regenerated parasitic products.
#pragma once

#include "bmf/pillow.hpp"

namespace bmf {

struct InvalidState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// label k of the undoubled system -> strands 2k-1, 2k
inline int strand_of(int label) { return 2 * label - 1; }
inline int strand_of_prime(int label) { return 2 * label; }
inline Block doubled_block(int label) {
  return Block(strand_of(label), strand_of_prime(label));
}

PunctureSystem double_system(const PunctureSystem& base);

enum class RegenerationRule { first, second, third };
enum class RegenerationVariant {
  none,
  left_pair,    // ii'_j
  right_pair,   // i_jj'
  both_pairs,   // ii'_jj' (second rule only)
};

// Rewrites one factor of the undoubled system into factors of the doubled
// system per the cited rule.  Variant choice is geometric input; this
// validates shape and produces the doubled spec.
std::vector<TwistSpec> apply_rule(const TwistSpec& factor,
                                  RegenerationRule rule,
                                  RegenerationVariant variant);

// Regenerated parasitic product D_t over the 48-strand system: one
// 2x2-block node per disjoint p, above-decorations per the transcription.
std::vector<TwistSpec> regenerated_parasitic_block(const LineArrangement& arr,
                                                   int t);
// C_i: concatenation over the same line sets as the degenerated product.
std::vector<TwistSpec> build_regenerated_parasitic(const LineArrangement& arr,
                                                   int vertex);

// Above-decoration (doubled labels) of the regenerated D_t.
std::vector<int> regenerated_decoration(int t);

}  // namespace bmf
