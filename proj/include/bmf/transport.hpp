// Transport of punctured-disk paths under braids (the Lefschetz-style
// skeleton moves): the image path satisfies
//   compile(path . w) = compile(path)^w .
// Images are held symbolically (appended conjugator) and normalized back to
// simple lane paths by bounded search when one exists.
#pragma once

#include <map>
#include <optional>

#include "bmf/disk.hpp"
#include "bmf/garside.hpp"

namespace bmf {

struct LanePath {
  int endpoint_a = 0, endpoint_b = 0;  // endpoint_a < endpoint_b
  std::map<int, Lane> lanes;           // every puncture strictly between
  std::vector<Conjugator> conj;        // as in TwistSpec
  BraidWord extra_conj;                // raw transport word, applied last

  bool is_simple() const { return conj.empty() && extra_conj.is_identity_word(); }
};

LanePath path_of(const TwistSpec& spec);       // simple specs only
TwistSpec spec_of(const LanePath& p, int eps = 1);

BraidWord compile_path(const LanePath& p, const PunctureSystem& sys);

// The image of p under the diffeomorphism induced by w.
LanePath apply_braid_to_path(const LanePath& p, const BraidWord& w,
                             const PunctureSystem& sys);

// Paths are equal when they are isotopic: same endpoints and equal
// halftwists (exact, via the Artin oracle for small systems, Garside
// normal form otherwise).
bool paths_equivalent(const LanePath& p, const LanePath& q,
                      const PunctureSystem& sys);

// Finds the simple lane path isotopic to p, if any (searches all lane
// assignments when the gap is small enough).
std::optional<LanePath> simplify_path(const LanePath& p,
                                      const PunctureSystem& sys,
                                      int max_gap = 14);

bool braid_equal_exact(const BraidWord& u, const BraidWord& v);

// Endpoints of the transposition induced by the compiled halftwist (for
// symbolic paths whose stored endpoints refer to the base arc).
std::pair<int, int> actual_endpoints(const LanePath& p,
                                     const PunctureSystem& sys);

}  // namespace bmf
