// Scratch: solve the tilde pair of F from the F F* identity by searching
// windings of the basic doubled branch pair.
#include <cstdio>
#include <vector>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main() {
  const auto sys = PunctureSystem::plain(8);
  const SpecPtr c2213 = make_spec(twist(Block(3, 4), Block(5), 2));

  std::vector<TwistSpec> Q = {
      twist(Block(3, 4), Block(5), 3),
      twist(Block(6), Block(7), 2),
      conj_by(twist(Block(5), Block(7), 2), c2213),
      conj_by(twist(Block(3, 4), Block(7), 3), c2213),
  };
  const BraidWord q = compile_product(Q, sys);
  BraidWord rhs(8);
  rhs.append(full_twist(8));
  for (int rep = 0; rep < 2; ++rep) {
    rhs.push(-5);
    rhs.push(-7);
    rhs.push(-1);
    rhs.push(-3);
  }
  // c = Z_{20 20'}^-1 Z_{13 13'}^-1
  BraidWord c(8);
  c.push(-7);
  c.push(-5);

  // u must satisfy  q u c^-1 q u c = rhs
  auto check = [&](const BraidWord& u) {
    BraidWord w = q;
    w.append(u);
    w.append(conjugate(compose(q, u), c));
    return burau_equal(w, rhs, 2, 11);
  };

  // base pairs: lanes of z_{1,2'} at 1'(pos2), 2(pos3); z_{1',2} direct
  std::vector<BraidWord> bases;
  for (std::uint32_t m = 0; m < 4; ++m) {
    TwistSpec t5 = twist(Block(1), Block(4), 1);
    std::vector<int> fl;
    if (m & 1) fl.push_back(2);
    if (m & 2) fl.push_back(3);
    t5 = lane_flips(std::move(t5), fl);
    TwistSpec t6 = twist(Block(2), Block(3), 1);
    for (bool swap : {false, true}) {
      BraidWord u(8);
      if (!swap) {
        u.append(compile_halftwist(t5, sys));
        u.append(compile_halftwist(t6, sys));
      } else {
        u.append(compile_halftwist(t6, sys));
        u.append(compile_halftwist(t5, sys));
      }
      bases.push_back(u);
    }
  }
  // winding menu
  std::vector<TwistSpec> menu = {
      twist(Block(3, 4), Block(5, 6), 2), twist(Block(3, 4), Block(7, 8), 2),
      twist(Block(1, 2), Block(5, 6), 2), twist(Block(1, 2), Block(7, 8), 2),
      twist(Block(4), Block(5, 6), 2),    twist(Block(4), Block(7, 8), 2),
      twist(Block(3, 4), Block(5), 2),    twist(Block(3, 4), Block(7), 2),
      twist(Block(1, 2), Block(3, 4), 2), twist(Block(5), Block(6), 1),
      twist(Block(7), Block(8), 1),       twist(Block(5, 6), Block(7, 8), 2),
  };
  std::vector<BraidWord> gs;
  gs.push_back(BraidWord(8));
  for (const auto& s : menu)
    for (int e : {1, -1}) gs.push_back(compile_halftwist(s, sys).pow(e));
  const std::size_t singles = gs.size();
  for (std::size_t i = 1; i < singles; ++i)
    for (std::size_t j = 1; j < singles; ++j)
      gs.push_back(compose(gs[i], gs[j]));

  std::printf("search space: %zu bases x %zu windings\n", bases.size(),
              gs.size());
  int hits = 0;
  for (std::size_t bi = 0; bi < bases.size(); ++bi)
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
      if (check(conjugate(bases[bi], gs[gi]))) {
        std::printf("HIT base=%zu winding=%zu\n", bi, gi);
        if (++hits > 6) return 0;
      }
    }
  std::printf("done, %d hits\n", hits);
  return 0;
}
