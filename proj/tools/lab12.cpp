// Scratch: calibrate the undetermined lane data of the vertex-2 monodromy
// against sub-model projections of the local identity.
#include <cstdio>
#include <vector>

#include "bmf/burau.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

namespace {

struct Knobs {
  std::uint32_t g6 = 0;      // Z^2_{1 1',5} lanes over {2,2',4,4'}
  std::uint32_t g7 = 0;      // Z^2_{1 1',5'} lanes over {2,2',4,4',5}
  std::uint32_t ff15 = 0;    // ff-conj Z^2_{1 1',5} lanes over {2,2',4,4'}
  std::uint32_t m8 = 0;      // Z^2_{4',20 20'} lanes over {5,5',13,13'}
  std::uint32_t m9 = 0;      // Z^2_{4,20 20'} lanes over {4',5,5',13,13'}
  std::uint32_t m9c13 = 0;   // conj Z^2_{4,13 13'} lanes over {4',5,5'}
  std::uint32_t m9c5 = 0;    // conj Z^2_{4,5 5'} lanes over {4'}
};

// vertex-2 monodromy with lane knobs; 12-strand local frame.
BraidWord phi2_with(const Frame& f, const Knobs& k) {
  const PunctureSystem sys = f.system();
  struct Q {
    const Frame& f;
    Block pr(int l) const {
      return Block(f.strand({l, false}), f.strand({l, true}));
    }
    Block pt(int l) const { return Block(f.strand({l, false})); }
    Block pp(int l) const { return Block(f.strand({l, true})); }
    int s(int l, bool p) const { return f.strand({l, p}); }
  } q{f};
  auto mask_flips = [&](TwistSpec s, std::uint32_t m,
                        std::vector<std::pair<int, bool>> pts) {
    std::vector<int> fl;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((m >> i) & 1) fl.push_back(q.s(pts[i].first, pts[i].second));
    return lane_flips(std::move(s), fl);
  };

  const TwistSpec c2_2p4 = twist(q.pr(2), q.pt(4), 2);
  const TwistSpec c1_1p4 = twist(q.pr(1), q.pt(4), 2);
  const TwistSpec c4p5 = twist(q.pp(4), q.pr(5), 2);
  const TwistSpec c4p13 = twist(q.pp(4), q.pr(13), 2);
  const TwistSpec c4_13 =
      mask_flips(twist(q.pt(4), q.pr(13), 2), k.m9c13,
                 {{4, true}, {5, false}, {5, true}});
  const TwistSpec c4_5 =
      mask_flips(twist(q.pt(4), q.pr(5), 2), k.m9c5, {{4, true}});
  const TwistSpec c4_4p = twist(q.pt(4), q.pp(4), 2);

  std::vector<TwistSpec> main1 = {
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
      conj_by(conj_by(mask_flips(twist(q.pp(4), q.pr(20), 2), k.m8,
                                 {{5, false}, {5, true}, {13, false},
                                  {13, true}}),
                      c4p13),
              c4p5),
      conj_by(
          conj_by(conj_by(conj_by(conj_by(mask_flips(
                                              twist(q.pt(4), q.pr(20), 2),
                                              k.m9,
                                              {{4, true},
                                               {5, false},
                                               {5, true},
                                               {13, false},
                                               {13, true}}),
                                          c4_13),
                                  c4_5),
                          c4_4p),
                  c2_2p4),
          c1_1p4),
  };
  const TwistSpec c5p13 = twist(q.pp(5), q.pr(13), 2);
  const TwistSpec c5p20 = twist(q.pp(5), q.pr(20), 2);
  const TwistSpec c2_2p5 = twist(q.pr(2), q.pt(5), 2);
  std::vector<TwistSpec> G = {
      twist(q.pp(5), q.pr(13), 2),
      twist(q.pr(2), q.pt(5), 3),
      conj_by(twist(q.pp(5), q.pr(20), 3), c5p13),
      conj_by(twist(q.pp(5), q.pr(13), 2),
              with_sign(twist(q.pr(13), q.pr(20), 2), -1)),
      conj_by(conj_by(conj_by(twist(q.pt(5), q.pp(5), 1), c2_2p5), c5p20),
              c5p13),
      mask_flips(twist(q.pr(1), q.pt(5), 2), k.g6,
                 {{2, false}, {2, true}, {4, false}, {4, true}}),
      conj_by(conj_by(mask_flips(twist(q.pr(1), q.pp(5), 2), k.g7,
                                 {{2, false},
                                  {2, true},
                                  {4, false},
                                  {4, true},
                                  {5, false}}),
                      c5p20),
              c5p13),
  };
  const SpecPtr c2213 = make_spec(twist(q.pr(2), q.pt(13), 2));
  std::array<TildePath, 2> tp;
  tp[0] = {{1, false}, {2, true}, {{1, true}},
           {LabelTwist{{{1, false}, {1, true}}, {{13, false}}, 2, -1, 1},
            LabelTwist{{{1, false}, {1, true}}, {{20, false}}, 2, -1, 1}}};
  tp[1] = {{1, true}, {2, false}, {}, tp[0].conj};
  auto tilde = [&](const TildePath& t) {
    const int sa = f.strand(t.from), sb = f.strand(t.to);
    TwistSpec s = twist(Block(std::min(sa, sb)), Block(std::max(sa, sb)), 1);
    std::vector<int> fl;
    for (const auto& p : t.above) {
      const int c = f.strand(p);
      if (c > s.a.hi && c < s.b.lo) fl.push_back(c);
    }
    s = lane_flips(std::move(s), fl);
    for (const auto& lt : t.conj) {
      Block a = lt.a.size() == 1
                    ? Block(f.strand(lt.a[0]))
                    : Block(f.strand(lt.a[0]), f.strand(lt.a[1]));
      Block b = lt.b.size() == 1
                    ? Block(f.strand(lt.b[0]))
                    : Block(f.strand(lt.b[0]), f.strand(lt.b[1]));
      s = conj_by(std::move(s), with_sign(twist(a, b, lt.eps), lt.sign),
                  lt.power);
    }
    return s;
  };
  std::vector<TwistSpec> F = {
      twist(q.pr(2), q.pt(13), 3),
      twist(q.pp(13), q.pt(20), 2),
      conj_by(twist(q.pt(13), q.pt(20), 2), c2213),
      conj_by(twist(q.pr(2), q.pt(20), 3), c2213),
      tilde(tp[0]),
      tilde(tp[1]),
  };
  std::vector<TwistSpec> Fs = F;
  for (auto& s : Fs) {
    s = conj_by(std::move(s), twist(q.pt(20), q.pp(20), 1), -1);
    s = conj_by(std::move(s), twist(q.pt(13), q.pp(13), 1), -1);
  }
  std::vector<TwistSpec> FF = F;
  FF.insert(FF.end(), Fs.begin(), Fs.end());
  const TwistSpec ff1 =
      mask_flips(twist(q.pr(2), q.pt(5), 2), 0, {});
  const TwistSpec ff2 = mask_flips(
      twist(q.pr(1), q.pt(5), 2), k.ff15,
      {{2, false}, {2, true}, {4, false}, {4, true}});
  for (auto& s : FF) {
    s = conj_by(std::move(s), ff1);
    s = conj_by(std::move(s), ff2);
  }
  std::vector<TwistSpec> group = G;
  group.insert(group.end(), FF.begin(), FF.end());
  for (auto& s : group) {
    s = conj_by(std::move(s), c2_2p4);
    s = conj_by(std::move(s), c1_1p4);
  }
  BraidWord w(sys.count);
  for (const auto& s : main1) w.append(compile_halftwist(s, sys));
  for (const auto& s : group) w.append(compile_halftwist(s, sys));
  return w;
}

}  // namespace

int main() {
  const Frame f12 = Frame::local(six_point_lines(2).sorted());
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

  // Stage 1: {1,5}-projection knobs.
  std::vector<Knobs> stage1;
  for (std::uint32_t g6 = 0; g6 < 16; ++g6)
    for (std::uint32_t g7 = 0; g7 < 32; ++g7)
      for (std::uint32_t ff15 = 0; ff15 < 16; ++ff15) {
        Knobs k;
        k.g6 = g6;
        k.g7 = g7;
        k.ff15 = ff15;
        const BraidWord w = phi2_with(f12, k);
        if (burau_equal(project(w, {1, 5}), project(rhs, {1, 5}), 2, 7))
          stage1.push_back(k);
      }
  std::printf("stage1 {1,5} hits: %zu\n", stage1.size());

  // Stage 2: add {4,20}-projection knobs on top of stage-1 hits.
  int full_hits = 0;
  for (const auto& k1 : stage1) {
    for (std::uint32_t m8 = 0; m8 < 16; ++m8)
      for (std::uint32_t m9 = 0; m9 < 32; ++m9)
        for (std::uint32_t c13 = 0; c13 < 8; ++c13)
          for (std::uint32_t c5 = 0; c5 < 2; ++c5) {
            Knobs k = k1;
            k.m8 = m8;
            k.m9 = m9;
            k.m9c13 = c13;
            k.m9c5 = c5;
            const BraidWord w = phi2_with(f12, k);
            if (!burau_equal(project(w, {4, 20}), project(rhs, {4, 20}), 2,
                             7))
              continue;
            if (!burau_equal(w, rhs, 2, 13)) continue;
            std::printf("FULL HIT g6=%u g7=%u ff15=%u m8=%u m9=%u c13=%u "
                        "c5=%u\n",
                        k.g6, k.g7, k.ff15, k.m8, k.m9, k.m9c13, k.m9c5);
            if (++full_hits >= 8) return 0;
          }
  }
  std::printf("full hits: %d\n", full_hits);
  return 0;
}
