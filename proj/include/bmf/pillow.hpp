// Combinatorics of the degenerated branch curve: the 24-line / 10-vertex
// incidence structure of the (2,2)-pillow, lexicographic line order,
// 3-/6-point classification, the parasitic products D_t and their
// concatenations C~_j.
#pragma once

#include <array>
#include <set>
#include <vector>

#include "bmf/disk.hpp"

namespace bmf {

struct ArrangementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LineArrangement {
  static constexpr int kVertices = 10;
  static constexpr int kLines = 24;
  // endpoint pairs (a<b), index 0 = line 1
  std::array<std::pair<int, int>, kLines> lines;

  bool is_three_point(int v) const {
    return v == 1 || v == 3 || v == 6 || v == 8;
  }
  std::vector<int> lines_at(int vertex) const;
  bool meet(int line_p, int line_t) const;
};

struct DisjointnessTable {
  std::set<std::pair<int, int>> pairs;  // unordered (p<t), no shared vertex
};

// Reconstructs the canonical arrangement by exhaustive search against the
// transcribed parasitic tables, the lexicographic order and the corner
// triples; a failure signals a dataset typo.
LineArrangement build_pillow();

DisjointnessTable disjoint_pairs(const LineArrangement& arr);

// Transcribed index sets of the parasitic products: p appears in D_t iff
// p < t and the lines are disjoint.
const std::vector<int>& parasitic_index_set(int t);
// Lane decoration of the degenerated D_t factors: barred paths with the
// listed punctures passed below instead.
struct ParasiticDecoration {
  bool bar = true;
  std::vector<int> below;  // labels passed on the flipped side
};
const ParasiticDecoration& parasitic_decoration(int t);

// Degenerated parasitic product D_t over the 24-puncture system.
std::vector<TwistSpec> build_parasitic_block(const LineArrangement& arr, int t);
// C~_j: concatenation of D_t over lines t whose smaller endpoint is j.
std::vector<TwistSpec> build_parasitic_product(const LineArrangement& arr,
                                               int vertex);
// Lines grouped by smaller endpoint, ascending.
std::vector<int> lines_with_smaller_endpoint(const LineArrangement& arr,
                                             int vertex);

// Full twist of the lines through a vertex, realized on below-lane paths
// between consecutive members (the local monodromy of the undeformed
// k-point).
std::vector<TwistSpec> vertex_full_twist_specs(const LineArrangement& arr,
                                               int vertex);

}  // namespace bmf
