// Scratch: solve for the required {4,20}-projection of the factor
// Z^2_{4,20 20'} from the rest of the vertex-2 identity.
#include <cstdio>

#include "bmf/garside.hpp"
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
  const std::vector<int> all = f12.lines;
  auto project = [&](const BraidWord& w, std::vector<int> kept) {
    std::vector<int> del;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool keep = false;
      for (int kk : kept)
        if (all[i] == kk) keep = true;
      if (!keep) {
        del.push_back(static_cast<int>(2 * i + 1));
        del.push_back(static_cast<int>(2 * i + 2));
      }
    }
    return delete_strands(w, del);
  };

  // knobs: g7@5 = 1 solved; m9 marked out by compiling with the factor
  // replaced by nothing: we rebuild main1 by hand here.
  lab12::Knobs k;
  k.g7 = 16;
  const BraidWord whole = lab12::phi2_with(f12, k);

  // same build with m9 dropped: difference isolates m9's position
  struct Q {
    const Frame& f;
    Block pr(int l) const {
      return Block(f.strand({l, false}), f.strand({l, true}));
    }
    Block pt(int l) const { return Block(f.strand({l, false})); }
    Block pp(int l) const { return Block(f.strand({l, true})); }
  } q{f12};
  const TwistSpec c2_2p4 = twist(q.pr(2), q.pt(4), 2);
  const TwistSpec c1_1p4 = twist(q.pr(1), q.pt(4), 2);
  const TwistSpec c4_13 = twist(q.pt(4), q.pr(13), 2);
  const TwistSpec c4_5 = twist(q.pt(4), q.pr(5), 2);
  const TwistSpec c4_4p = twist(q.pt(4), q.pp(4), 2);
  const TwistSpec m9 = conj_by(
      conj_by(conj_by(conj_by(conj_by(twist(q.pt(4), q.pr(20), 2), c4_13),
                              c4_5),
                      c4_4p),
              c2_2p4),
      c1_1p4);
  const BraidWord m9w = compile_halftwist(m9, sys12);

  // locate m9's word inside the whole by recompiling prefix up to m9
  lab12::Knobs k0 = k;
  const BraidWord pref_and_m9 = [&] {
    // main1 compiled: first 9 factors; m9 is factor index 8
    BraidWord w(12);
    // cheat: phi2_with compiles main then group; we rebuild main prefix
    // by slicing: compile main factors 0..7 identically
    // (duplicated logic kept in lab12_phi2.inc; here we only need lengths)
    return w;
  }();
  (void)pref_and_m9;
  (void)k0;

  // A = prefix before m9 (main factors 0..7), B = suffix after (group).
  // We recover them by splitting `whole` around m9w's letters: prefix
  // length = total length of first 8 main factors. Recompute:
  // Simpler: rebuild crudely by compiling the same first 8 factors.
  // To stay safe, recompute prefix via phi2_with on a copy whose m9 and
  // subsequent group are dropped... instead: direct approach below.
  // prefix word:
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
  // suffix = whole minus prefix minus m9w (as words)
  BraidWord suffix(12);
  {
    const auto& wl = whole.letters();
    const std::size_t cut = prefix.size() + m9w.size();
    std::vector<int> tail(wl.begin() + static_cast<long>(cut), wl.end());
    suffix = BraidWord(12, tail);
  }
  // required m9 element X: prefix * X * suffix = rhs
  BraidWord X = compose(
      std::vector{prefix.inverse(), rhs, suffix.inverse()});
  // compare X with m9 candidates in the {4,20} projection
  auto Xp = project(X, {4, 20});
  std::printf("needed m9 {4,20}-projection: deg=%lld nf=%s\n",
              exponent_sum(Xp), nf_to_word(normal_form(Xp)).str().c_str());
  auto Mp = project(m9w, {4, 20});
  std::printf("current m9 {4,20}-projection: deg=%lld nf=%s\n",
              exponent_sum(Mp), nf_to_word(normal_form(Mp)).str().c_str());
  // candidates: conjugates of Z^2_{4,20 20'} by powers of Z^2_{4 4'} and
  // lane variants
  const auto sys4 = PunctureSystem::plain(4);
  for (int lane = 0; lane < 2; ++lane)
    for (int e = -3; e <= 3; ++e) {
      TwistSpec base = twist(Block(1), Block(3, 4), 2);
      if (lane) base = above(std::move(base), {2});
      BraidWord cand = compile_halftwist(base, sys4);
      BraidWord cj(4);
      for (int r = 0; r < std::abs(e); ++r) cj.push(e > 0 ? 1 : -1);
      cand = conjugate(cand, cj);
      if (nf_equal(cand, Xp))
        std::printf("MATCH: lane@4'=%d conj Z_{44'}^%d\n", lane, e);
    }
  return 0;
}
