// The ten local braid monodromies of the regenerated branch curve and the
// assembly of the full factorization, with the audit stack.
#pragma once

#include <functional>
#include <map>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/regen.hpp"

namespace bmf {

// A point of the doubled fiber named by its line label and prime.
struct LabelPoint {
  int label = 0;
  bool prime = false;
  auto operator<=>(const LabelPoint&) const = default;
};

// Coordinate frame: assigns strand positions to labelled points.  The global
// frame covers all 24 doubled lines; a local frame covers the lines through
// one vertex.
struct Frame {
  std::vector<int> lines;  // ascending line labels present
  int strand(const LabelPoint& p) const;
  int count() const { return 2 * static_cast<int>(lines.size()); }
  bool contains(int label) const;
  PunctureSystem system() const;

  static Frame global();
  static Frame local(std::vector<int> lines);
};

struct TwistFactor {
  TwistSpec spec;
  SingularityKind kind;
  std::string origin;
};

struct Factorization {
  PunctureSystem ambient;
  std::vector<TwistFactor> factors;

  BraidWord word() const;
  std::vector<TwistFactor> expanded() const;
};

// A full twist between two labelled blocks, used for conjugator stacks kept
// in label terms (instantiated per frame).
struct LabelTwist {
  std::vector<LabelPoint> a, b;  // one point or an adjacent doubled pair
  int eps = 2;
  int sign = 1;
  int power = 1;
};

// Figure-fixed branch paths: the two tilde factors of each 6-point.  Their
// endpoints and degree come from the monodromy statements; the lane and
// winding data is recorded here and validated by the local-model and global
// audits.
struct TildePath {
  LabelPoint from, to;
  std::vector<LabelPoint> above;  // points passed above (all others below)
  std::vector<LabelTwist> conj;   // winding, leftmost applied first
};
const std::array<TildePath, 2>& tilde_paths(int vertex);

// Roles of the six lines around a 6-point.
struct SixPointLines {
  std::array<int, 2> diagonal, vertical, horizontal;
  std::vector<int> sorted() const;
};
const SixPointLines& six_point_lines(int vertex);
const std::array<int, 3>& three_point_lines(int vertex);
bool is_three_point(int vertex);

// Local monodromy factor lists, in the given frame.
std::vector<TwistFactor> vertex_monodromy(int vertex, const Frame& f);
// Six-point monodromy with explicit tilde-path data (lane calibration).
std::vector<TwistFactor> vertex_monodromy(int vertex, const Frame& f,
                                          const std::array<TildePath, 2>& tp);

// Delta^2_48 as the ordered concatenation of the parasitic products and the
// local monodromies (the composition applies the highest vertex first).
Factorization assemble_factorization(const LineArrangement& arr);

struct CensusCount {
  long long cusps = 0, nodes = 0, branch = 0, tangency = 0;
  long long degree() const { return 3 * cusps + 2 * nodes + branch + 4 * tangency; }
};
CensusCount census(const std::vector<TwistFactor>& factors);

enum class AuditLevel { degree, census, permutation, burau, normal_form };

struct AuditReport {
  bool pass = false;
  long long degree_total = 0;
  long long degree_three_points = 0, degree_six_points = 0,
            degree_parasitic = 0;
  CensusCount counts;
  bool permutation_identity = false;
  int burau_seeds = 0;
  bool burau_match = false;
  bool nf_match = false;
  std::string first_divergence;  // origin of the first failing block, if any
  std::string text() const;
};

AuditReport audit(const Factorization& f, AuditLevel level, int seeds = 3);

// The paper-stated local identity of a 6-point monodromy: the product of
// its factors in the 12-strand local model equals
//   prod_j Z_{jj'}^{-1} * Delta^2_12  over the six lines at the vertex.
bool six_point_local_identity(int vertex);

}  // namespace bmf
