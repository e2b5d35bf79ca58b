// Scratch: the F F* sub-identity of the 6-point monodromy in its 8-strand
// local model, searching all figure-fixed lane data in F.
//   F F^{rho^-1} = Delta^2_8 rho^-2 (Z_11' Z_22')^-2,  rho = Z_13 13' Z_20 20'
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main() {
  // local strands: 1,1',2,2',13,13',20,20' -> positions 1..8
  const auto sys = PunctureSystem::plain(8);
  const SpecPtr c2213 = make_spec(twist(Block(3, 4), Block(5), 2));

  BraidWord rhs(8);
  rhs.append(full_twist(8));
  for (int rep = 0; rep < 2; ++rep) {
    rhs.push(-5);
    rhs.push(-7);
    rhs.push(-1);
    rhs.push(-3);
  }

  // lane bits: f3@13'(6), f4@13(5), f4@13'(6), t5@1'(2), t5@2(3)
  // order bits: 5 = reverse F list, 6 = conjugate F* by rho instead of
  // rho^-1, 7 = put F* first
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    auto lane = [&](int bit) { return (bits >> bit) & 1; };
    std::vector<TwistSpec> F;
    F.push_back(twist(Block(3, 4), Block(5), 3));           // Z^3_{2 2',13}
    F.push_back(twist(Block(6), Block(7), 2));              // Z^2_{13' 20}
    {
      TwistSpec s = twist(Block(5), Block(7), 2);           // Z^2_{13 20}
      if (lane(0)) s = above(std::move(s), {6});
      F.push_back(conj_by(std::move(s), c2213));
    }
    {
      TwistSpec s = twist(Block(3, 4), Block(7), 3);        // Z^3_{2 2',20}
      std::vector<int> fl;
      if (lane(1)) fl.push_back(5);
      if (lane(2)) fl.push_back(6);
      s = lane_flips(std::move(s), fl);
      F.push_back(conj_by(std::move(s), c2213));
    }
    {
      TwistSpec s = twist(Block(1), Block(4), 1);           // Z~_{1 2'}
      std::vector<int> fl;
      if (lane(3)) fl.push_back(2);
      if (lane(4)) fl.push_back(3);
      F.push_back(lane_flips(std::move(s), fl));
    }
    F.push_back(twist(Block(2), Block(3), 1));              // Z~_{1' 2}

    if (lane(5)) std::reverse(F.begin(), F.end());
    std::vector<TwistSpec> Fstar = F;
    const SpecPtr z20 = make_spec(twist(Block(7), Block(8), 1));
    const SpecPtr z13 = make_spec(twist(Block(5), Block(6), 1));
    const int cpow = lane(6) ? 1 : -1;
    for (auto& s : Fstar) {
      s = conj_by(std::move(s), z20, cpow);
      s = conj_by(std::move(s), z13, cpow);
    }
    BraidWord w(8);
    if (lane(7)) std::swap(F, Fstar);
    for (const auto& s : F) w.append(compile_halftwist(s, sys));
    for (const auto& s : Fstar) w.append(compile_halftwist(s, sys));
    if (burau_equal(w, rhs, 2, 5))
      std::printf("bits=%u PASSES (f3@13'=%u f4@13=%u f4@13'=%u t5@1'=%u "
                  "t5@2=%u revF=%u rho+=%u swap=%u)\n",
                  bits, lane(0), lane(1), lane(2), lane(3), lane(4), lane(5),
                  lane(6), lane(7));
  }
  std::printf("search done\n");
  return 0;
}
