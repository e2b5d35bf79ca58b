// Scratch: tiny B_4 pair-model equations for the x/x'-vs-far-pair factor
// pairs of each 6-point.  Model strands: x, x', f, f' at positions 1..4.
#include <cstdio>

#include "bmf/garside.hpp"
#include "bmf/transport.hpp"

using namespace bmf;

int main() {
  const auto sys = PunctureSystem::plain(4);
  // building blocks
  const BraidWord s1 = BraidWord(4, {1});
  const BraidWord s3 = BraidWord(4, {3});
  const BraidWord A = compile_halftwist(twist(Block(1), Block(3, 4), 2), sys);
  const BraidWord Aab =
      compile_halftwist(above(twist(Block(1), Block(3, 4), 2), {2}), sys);
  const BraidWord B = compile_halftwist(twist(Block(2), Block(3, 4), 2), sys);
  const BraidWord s1sq = BraidWord(4, {1, 1});

  // target for: sigma(x x') * X * Y * sigma(f f') = Z_xx'^-1 Z_ff'^-1 Delta^2
  BraidWord target(4);
  target.push(-1);
  target.push(-3);
  target.append(full_twist(4));
  target = compose(std::vector{s1.inverse(), target, s3.inverse()});

  struct Cand {
    const char* name;
    BraidWord w;
  };
  std::vector<Cand> xs = {
      {"Z2_{x,ff'}", A},
      {"Z2_{x,ff'}(x')", Aab},
      {"Z2_{x,ff'}^{Z2xx'}", conjugate(A, s1sq)},
      {"Z2_{x,ff'}(x')^{Z2xx'}", conjugate(Aab, s1sq)},
      {"Z2_{x,ff'}^{Z-2xx'}", conjugate(A, s1sq.inverse())},
      {"Z2_{x,ff'}(x')^{Z-2xx'}", conjugate(Aab, s1sq.inverse())},
      {"Z2_{x',ff'}", B},
  };
  for (const auto& u : xs)
    for (const auto& v : xs) {
      if (nf_equal(compose(u.w, v.w), target))
        std::printf("HIT: %s * %s\n", u.name, v.name);
    }
  // also with the far halftwist between the two factors (for vertex 10's
  // shape where the pair factors are separated in the list)
  for (const auto& u : xs)
    for (const auto& v : xs) {
      if (nf_equal(compose(std::vector{u.w, s3, v.w}), target))
        std::printf("HIT-mid-sigma_f: %s * sf * %s (target without sf at "
                    "end)\n",
                    u.name, v.name);
    }
  return 0;
}
