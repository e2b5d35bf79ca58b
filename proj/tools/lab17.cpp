// Scratch: m9 candidate sweep with full projection battery per candidate.
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main() {
  const Frame f12 = Frame::local(six_point_lines(2).sorted());
  const auto sys12 = f12.system();
  const std::vector<int> all = f12.lines;

  struct Q {
    const Frame& f;
    Block pr(int l) const {
      return Block(f.strand({l, false}), f.strand({l, true}));
    }
    Block pt(int l) const { return Block(f.strand({l, false})); }
    Block pp(int l) const { return Block(f.strand({l, true})); }
    int s(int l, bool p) const { return f.strand({l, p}); }
  } q{f12};

  const auto mono = vertex_monodromy(2, f12);
  std::vector<BraidWord> words;
  for (const auto& fac : mono) words.push_back(compile_halftwist(fac.spec, sys12));
  const std::size_t m9_index = 8;  // phi2[8]

  BraidWord rhs(12);
  for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
  rhs.append(full_twist(12));

  auto battery = [&](const BraidWord& lhs) {
    int fails = 0;
    std::string worst;
    for (std::uint32_t keep = 1; keep < 64; ++keep) {
      std::vector<int> del_pos;
      std::vector<int> kept;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((keep >> i) & 1)
          kept.push_back(all[i]);
        else {
          del_pos.push_back(static_cast<int>(2 * i + 1));
          del_pos.push_back(static_cast<int>(2 * i + 2));
        }
      }
      if (kept.size() < 2) continue;
      if (!burau_equal(delete_strands(lhs, del_pos),
                       delete_strands(rhs, del_pos), 2, 17)) {
        ++fails;
        if (worst.empty() || kept.size() < 3) {
          worst += "{";
          for (int k : kept) worst += " " + std::to_string(k);
          worst += " } ";
        }
      }
    }
    return std::pair{fails, worst};
  };

  // m9 variants: lane mask over {4',5,5',13,13'} x z44 mode x conj lanes
  const std::vector<std::pair<int, bool>> span = {
      {4, true}, {5, false}, {5, true}, {13, false}, {13, true}};
  for (std::uint32_t lanes = 0; lanes < 32; ++lanes) {
    for (int z44mode = 0; z44mode < 3; ++z44mode) {  // +1, absent, -1
      TwistSpec base = twist(q.pt(4), q.pr(20), 2);
      std::vector<int> fl;
      for (std::size_t i = 0; i < span.size(); ++i)
        if ((lanes >> i) & 1)
          fl.push_back(q.s(span[i].first, span[i].second));
      base = lane_flips(std::move(base), fl);
      base = conj_by(std::move(base), twist(q.pt(4), q.pr(13), 2));
      base = conj_by(std::move(base), twist(q.pt(4), q.pr(5), 2));
      if (z44mode == 0)
        base = conj_by(std::move(base), twist(q.pt(4), q.pp(4), 2));
      else if (z44mode == 2)
        base = conj_by(std::move(base),
                       with_sign(twist(q.pt(4), q.pp(4), 2), -1));
      base = conj_by(std::move(base), twist(q.pr(2), q.pt(4), 2));
      base = conj_by(std::move(base), twist(q.pr(1), q.pt(4), 2));

      BraidWord lhs(12);
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i == m9_index)
          lhs.append(compile_halftwist(base, sys12));
        else
          lhs.append(words[i]);
      }
      auto [fails, worst] = battery(lhs);
      if (fails <= 4)
        std::printf("lanes=%02u z44=%d fails=%d  %s\n", lanes, z44mode,
                    fails, worst.c_str());
      if (fails == 0) {
        std::printf("  ^^ FULL: %s\n",
                    burau_equal(lhs, rhs, 3, 77) ? "PASS" : "fail");
      }
    }
  }
  return 0;
}
