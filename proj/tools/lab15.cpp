// Scratch: full 12-strand identity with the two m9 candidates.
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

namespace lab12 {
#include "lab12_phi2.inc"
}

int main() {
  const Frame f12 = Frame::local(six_point_lines(2).sorted());
  const auto sys12 = f12.system();
  BraidWord rhs(12);
  for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
  rhs.append(full_twist(12));

  struct Q {
    const Frame& f;
    Block pr(int l) const {
      return Block(f.strand({l, false}), f.strand({l, true}));
    }
    Block pt(int l) const { return Block(f.strand({l, false})); }
    Block pp(int l) const { return Block(f.strand({l, true})); }
    int s(int l, bool p) const { return f.strand({l, p}); }
  } q{f12};

  // Baseline with g7@5 fixed; then rebuild whole word replacing the m9
  // factor word by candidates.
  lab12::Knobs k;
  k.g7 = 16;
  const BraidWord whole = lab12::phi2_with(f12, k);

  const TwistSpec c2_2p4 = twist(q.pr(2), q.pt(4), 2);
  const TwistSpec c1_1p4 = twist(q.pr(1), q.pt(4), 2);
  const TwistSpec c4_13 = twist(q.pt(4), q.pr(13), 2);
  const TwistSpec c4_5 = twist(q.pt(4), q.pr(5), 2);
  const TwistSpec m9_current = conj_by(
      conj_by(conj_by(conj_by(conj_by(twist(q.pt(4), q.pr(20), 2), c4_13),
                              c4_5),
                      twist(q.pt(4), q.pp(4), 2)),
              c2_2p4),
      c1_1p4);
  const BraidWord m9w = compile_halftwist(m9_current, sys12);

  BraidWord prefix(12);
  {
    const TwistSpec c4p5 = twist(q.pp(4), q.pr(5), 2);
    const TwistSpec c4p13 = twist(q.pp(4), q.pr(13), 2);
    std::vector<TwistSpec> main_prefix = {
        twist(q.pr(2), q.pt(4), 2),
        twist(q.pp(4), q.pr(5), 2),
        twist(q.pr(1), q.pt(4), 3),
        conj_by(twist(q.pp(4), q.pr(13), 3), c4p5),
        conj_by(twist(q.pr(2), q.pt(4), 2), c1_1p4),
        conj_by(twist(q.pp(4), q.pr(5), 2),
                with_sign(twist(q.pr(5), q.pr(13), 2), -1)),
        conj_by(conj_by(conj_by(conj_by(twist(q.pt(4), q.pp(4), 1), c4p13),
                                c4p5),
                        c2_2p4),
                c1_1p4),
        conj_by(conj_by(twist(q.pp(4), q.pr(20), 2), c4p13), c4p5),
    };
    prefix = compile_product(main_prefix, sys12);
  }
  BraidWord suffix(12);
  {
    const auto& wl = whole.letters();
    const std::size_t cut = prefix.size() + m9w.size();
    suffix = BraidWord(
        12, std::vector<int>(wl.begin() + static_cast<long>(cut), wl.end()));
  }

  auto test = [&](const char* name, const TwistSpec& m9) {
    BraidWord w = prefix;
    w.append(compile_halftwist(m9, sys12));
    w.append(suffix);
    std::printf("%s: %s\n", name, burau_equal(w, rhs, 3, 19) ? "PASS" : "fail");
  };

  // (a) printed stack but no Z^2_{4 4'}
  test("m9 without Z^2_{44'}",
       conj_by(conj_by(conj_by(conj_by(twist(q.pt(4), q.pr(20), 2), c4_13),
                               c4_5),
                       c2_2p4),
               c1_1p4));
  // (b) base above 4', conjugator Z^-2_{4 4'}
  test("m9 above-4' with Z^-2_{44'}",
       conj_by(conj_by(conj_by(conj_by(conj_by(above(twist(q.pt(4), q.pr(20), 2),
                                                     {q.s(4, true)}),
                                               c4_13),
                                       c4_5),
                               with_sign(twist(q.pt(4), q.pp(4), 2), -1)),
                       c2_2p4),
               c1_1p4));
  // (c) base above 4', printed positive Z^2_{44'}
  test("m9 above-4' with Z^2_{44'}",
       conj_by(conj_by(conj_by(conj_by(conj_by(above(twist(q.pt(4), q.pr(20), 2),
                                                     {q.s(4, true)}),
                                               c4_13),
                                       c4_5),
                               twist(q.pt(4), q.pp(4), 2)),
                       c2_2p4),
               c1_1p4));
  return 0;
}
