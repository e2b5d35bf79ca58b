// The punctured-disk path calculus: decorated halftwist specifications
// (bars, lane overrides, block endpoints, cusp and block macros, conjugator
// stacks) and their compilation to braid words.
//
// A simple path from a to b (a < b) is drawn monotonically, passing each
// intermediate puncture on its recorded side; undecorated paths run below
// the real axis, barred paths above, lane overrides flip single punctures.
// Its halftwist compiles to W^-1 sigma_a W with
//   W = sigma_{a+1}^{e} ... sigma_{b-1}^{e},  e = +1 iff the lane is below.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bmf/braid.hpp"

namespace bmf {

struct MalformedSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Lane : unsigned char { below, above };

enum class SingularityKind : unsigned char { branch, node, cusp, tangency };

SingularityKind kind_for_epsilon(int eps);
int epsilon_for_kind(SingularityKind k);

// Punctures 1..count with display labels. The doubled 48-point system maps
// label k to strand 2k-1 and k' to strand 2k.
struct PunctureSystem {
  int count = 0;
  std::vector<std::string> labels;

  static PunctureSystem plain(int n);
  // 24 base labels "1".."24"; doubling gives "1","1'",...,"24","24'".
  static PunctureSystem doubled(int base);
  const std::string& label(int puncture) const {
    return labels[static_cast<std::size_t>(puncture - 1)];
  }
};

// A block endpoint: one puncture or two adjacent punctures.
struct Block {
  int lo = 0, hi = 0;
  Block() = default;
  Block(int single) : lo(single), hi(single) {}
  Block(int l, int h) : lo(l), hi(h) {
    if (h != l && h != l + 1) throw MalformedSpec("block must be adjacent");
  }
  int size() const { return hi - lo + 1; }
  bool operator==(const Block&) const = default;
};

enum class Macro : unsigned char {
  none,            // simple halftwist power
  lemma_split,     // block full twist, expands to simple full twists
  cusp_block_a,    // Z^3_{ii',j}: three conjugated cusps, block on the left
  cusp_block_b,    // Z^3_{i,jj'}: three conjugated cusps, block on the right
};

struct TwistSpec;
using SpecPtr = std::shared_ptr<const TwistSpec>;

struct Conjugator {
  SpecPtr spec;
  int power = 1;
};

struct TwistSpec {
  Block a, b;               // a.hi < b.lo
  int eps = 1;              // 1..4
  int sign = 1;             // actual exponent = sign * eps
  bool bar = false;         // default lane above instead of below
  std::vector<int> flips;   // punctures strictly between blocks, lane flipped
  Macro macro = Macro::none;
  std::vector<Conjugator> conj;  // leftmost applied first: g^{h1 h2}
  bool figure_path = false;      // lane data fixed from a drawn figure

  Lane lane_at(int puncture) const;
  bool is_simple() const {
    return macro == Macro::none && a.size() == 1 && b.size() == 1;
  }
  SingularityKind kind() const { return kind_for_epsilon(eps); }
  std::string str(const PunctureSystem* sys = nullptr) const;
};

// Builders.
TwistSpec twist(Block a, Block b, int eps);
SpecPtr make_spec(TwistSpec s);
TwistSpec barred(TwistSpec s);
TwistSpec with_sign(TwistSpec s, int sign);
TwistSpec above(TwistSpec s, std::vector<int> punctures);  // lane overrides
TwistSpec lane_flips(TwistSpec s, std::vector<int> punctures);
TwistSpec conj_by(TwistSpec s, SpecPtr h, int power = 1);
TwistSpec conj_by(TwistSpec s, const TwistSpec& h, int power = 1);

// Expansion of macros into simple specs (cusp triples, block full twists per
// the regeneration block formulas).  Order and lane choices follow the
// identities verified in the local-model tests.
std::vector<TwistSpec> expand_macro(const TwistSpec& spec);
// Fully recursive: output contains only simple specs.
std::vector<TwistSpec> expand_all(const TwistSpec& spec);

// Compilation to a braid word in the ambient system.
BraidWord compile_halftwist(const TwistSpec& spec, const PunctureSystem& sys);
BraidWord compile_product(const std::vector<TwistSpec>& specs,
                          const PunctureSystem& sys);

// Exponent contribution (sum over expansion of sign*eps), no compile needed.
long long spec_degree(const TwistSpec& spec);
// Number of simple factors after full expansion.
int spec_multiplicity(const TwistSpec& spec);

}  // namespace bmf
