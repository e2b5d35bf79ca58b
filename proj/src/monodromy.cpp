#include "bmf/monodromy.hpp"

#include <algorithm>

namespace bmf {

int Frame::strand(const LabelPoint& p) const {
  const auto it = std::lower_bound(lines.begin(), lines.end(), p.label);
  if (it == lines.end() || *it != p.label)
    throw MalformedSpec("label not in frame: " + std::to_string(p.label));
  const int idx = static_cast<int>(it - lines.begin()) + 1;
  return 2 * idx - 1 + (p.prime ? 1 : 0);
}

bool Frame::contains(int label) const {
  return std::binary_search(lines.begin(), lines.end(), label);
}

PunctureSystem Frame::system() const {
  PunctureSystem s;
  s.count = count();
  for (int l : lines) {
    s.labels.push_back(std::to_string(l));
    s.labels.push_back(std::to_string(l) + "'");
  }
  return s;
}

Frame Frame::global() {
  Frame f;
  f.lines.resize(24);
  for (int i = 0; i < 24; ++i) f.lines[static_cast<std::size_t>(i)] = i + 1;
  return f;
}

Frame Frame::local(std::vector<int> lines) {
  std::sort(lines.begin(), lines.end());
  Frame f;
  f.lines = std::move(lines);
  return f;
}

BraidWord Factorization::word() const {
  BraidWord w(ambient.count);
  for (const auto& f : factors) w.append(compile_halftwist(f.spec, ambient));
  return w;
}

std::vector<TwistFactor> Factorization::expanded() const {
  std::vector<TwistFactor> out;
  for (const auto& f : factors)
    for (const auto& s : expand_all(f.spec))
      out.push_back({s, s.kind(), f.origin});
  return out;
}

namespace {

constexpr std::array<std::array<int, 3>, 4> kTriples = {{
    {1, 3, 19}, {2, 6, 14}, {7, 10, 17}, {11, 12, 24}}};

const std::map<int, SixPointLines>& six_point_table() {
  static const std::map<int, SixPointLines> t = {
      {2, {{4, 5}, {13, 20}, {1, 2}}},   {4, {{4, 8}, {3, 7}, {15, 21}}},
      {5, {{5, 9}, {6, 11}, {16, 22}}},  {7, {{8, 9}, {18, 23}, {10, 12}}},
      {9, {{14, 17}, {13, 18}, {15, 16}}},
      {10, {{19, 24}, {20, 23}, {21, 22}}},
  };
  return t;
}

std::map<int, std::array<TildePath, 2>>& tilde_table() {
  // Lane and winding data of the figure-fixed branch paths, solved from the
  // F F* sub-identities of the local models and validated by the six-point
  // local identities and the global audit.  The first path of each pair
  // passes above the primed partner of its left endpoint; both wind around
  // the named vertical lines.
  auto pair_of = [](int h1, int h2, std::vector<LabelTwist> conj) {
    return std::array<TildePath, 2>{
        TildePath{{h1, false}, {h2, true}, {{h1, true}}, conj},
        TildePath{{h1, true}, {h2, false}, {}, std::move(conj)}};
  };
  auto block_single = [](int pair_line, int single_line, bool single_prime,
                         int sign) {
    LabelTwist lt;
    lt.a = {{pair_line, false}, {pair_line, true}};
    lt.b = {{single_line, single_prime}};
    if (lt.b[0].label < lt.a[0].label) std::swap(lt.a, lt.b);
    lt.sign = sign;
    return lt;
  };
  auto single_block = [](int single_line, bool single_prime, int pair_line,
                         int sign) {
    LabelTwist lt;
    lt.a = {{single_line, single_prime}};
    lt.b = {{pair_line, false}, {pair_line, true}};
    if (lt.b[0].label < lt.a[0].label) std::swap(lt.a, lt.b);
    lt.sign = sign;
    return lt;
  };
  static std::map<int, std::array<TildePath, 2>> t = {
      {2, pair_of(1, 2,
                  {block_single(1, 13, false, -1),
                   block_single(1, 20, false, -1)})},
      {7, pair_of(10, 12,
                  {block_single(10, 18, false, -1),
                   block_single(10, 23, false, -1)})},
      {4, pair_of(15, 21,
                  {single_block(3, false, 15, -1),
                   single_block(7, false, 15, -1)})},
      {5, pair_of(16, 22,
                  {single_block(6, false, 16, -1),
                   single_block(11, false, 16, -1)})},
      {9, pair_of(15, 16,
                  {single_block(18, false, 15, -1),
                   single_block(13, true, 15, 1)})},
      {10, pair_of(21, 22,
                   {single_block(23, false, 21, -1),
                    single_block(20, true, 21, 1)})},
  };
  return t;
}

// Spec-building helpers over a frame.
struct B {
  const Frame& f;

  Block pair(int l) const {
    return Block(f.strand({l, false}), f.strand({l, true}));
  }
  Block pt(int l) const { return Block(f.strand({l, false})); }
  Block ptp(int l) const { return Block(f.strand({l, true})); }

  TwistSpec z(Block a, Block b, int eps) const { return twist(a, b, eps); }
  TwistSpec zneg(Block a, Block b) const {
    return with_sign(twist(a, b, 2), -1);
  }
  Block label_block(const std::vector<LabelPoint>& pts) const {
    if (pts.size() == 1) return Block(f.strand(pts[0]));
    return Block(std::min(f.strand(pts[0]), f.strand(pts[1])),
                 std::max(f.strand(pts[0]), f.strand(pts[1])));
  }
  TwistSpec tilde(const TildePath& tp) const {
    const int sa = f.strand(tp.from), sb = f.strand(tp.to);
    TwistSpec s = twist(Block(std::min(sa, sb)), Block(std::max(sa, sb)), 1);
    std::vector<int> flips;
    for (const auto& p : tp.above) {
      if (!f.contains(p.label)) continue;
      const int c = f.strand(p);
      if (c > s.a.hi && c < s.b.lo) flips.push_back(c);
    }
    s = lane_flips(std::move(s), flips);
    for (const auto& lt : tp.conj) {
      TwistSpec h = with_sign(
          twist(label_block(lt.a), label_block(lt.b), lt.eps), lt.sign);
      s = conj_by(std::move(s), std::move(h), lt.power);
    }
    s.figure_path = true;
    return s;
  }
};

TwistSpec cstack(TwistSpec s, std::initializer_list<TwistSpec> hs) {
  for (const auto& h : hs) s = conj_by(std::move(s), h);
  return s;
}
TwistSpec cstack(TwistSpec s,
                 std::initializer_list<std::pair<TwistSpec, int>> hs) {
  for (const auto& [h, p] : hs) s = conj_by(std::move(s), h, p);
  return s;
}

void conj_each(std::vector<TwistSpec>& v, const TwistSpec& h, int pow = 1) {
  const SpecPtr hp = make_spec(h);
  for (auto& s : v) s = conj_by(std::move(s), hp, pow);
}

std::vector<TwistFactor> tag(const std::vector<TwistSpec>& specs,
                             const std::string& prefix) {
  std::vector<TwistFactor> out;
  out.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i)
    out.push_back(
        {specs[i], specs[i].kind(), prefix + "[" + std::to_string(i) + "]"});
  return out;
}

// F, G and the main list of each 6-point, as printed in the monodromy
// statements.  The returned specs are in the given frame.
struct SixPointParts {
  std::vector<TwistSpec> main_before_group;  // factors before the G/F group
  std::vector<TwistSpec> main_after_group;
  std::vector<TwistSpec> g_before_ff;  // G factors before the F F* insert,
  std::vector<TwistSpec> g_after_ff;   // empty unless F F* sits inside G
  std::vector<TwistSpec> f_list;
  std::vector<std::pair<TwistSpec, int>> rho;       // F* conjugator stack
  std::vector<TwistSpec> ff_conj;                   // (F F*)^...
  std::vector<std::pair<TwistSpec, int>> group_conj;  // whole-group stack
  bool ff_inside_g = false;
  int group_position = 0;  // index in the main list where the group sits
};

SixPointParts six_parts(int vertex, const Frame& f,
                        const std::array<TildePath, 2>& tp) {
  const B q{f};
  SixPointParts p;
  switch (vertex) {
    case 2: {
      p.main_before_group = {
          q.z(q.pair(2), q.pt(4), 2),
          q.z(q.ptp(4), q.pair(5), 2),
          q.z(q.pair(1), q.pt(4), 3),
          cstack(q.z(q.ptp(4), q.pair(13), 3), {q.z(q.ptp(4), q.pair(5), 2)}),
          cstack(q.z(q.pair(2), q.pt(4), 2), {q.z(q.pair(1), q.pt(4), 2)}),
          cstack(q.z(q.ptp(4), q.pair(5), 2),
                 {q.zneg(q.pair(5), q.pair(13))}),
          cstack(q.z(q.pt(4), q.ptp(4), 1),
                 {q.z(q.ptp(4), q.pair(13), 2), q.z(q.ptp(4), q.pair(5), 2),
                  q.z(q.pair(2), q.pt(4), 2), q.z(q.pair(1), q.pt(4), 2)}),
          cstack(q.z(q.ptp(4), q.pair(20), 2),
                 {q.z(q.ptp(4), q.pair(13), 2), q.z(q.ptp(4), q.pair(5), 2)}),
          // the printed stack carries an extra Z^2_{4 4'}; the local
          // identity only holds without it
          cstack(q.z(q.pt(4), q.pair(20), 2),
                 {q.z(q.pt(4), q.pair(13), 2), q.z(q.pt(4), q.pair(5), 2),
                  q.z(q.pair(2), q.pt(4), 2), q.z(q.pair(1), q.pt(4), 2)}),
      };
      p.group_position = 9;
      p.g_before_ff = {
          q.z(q.ptp(5), q.pair(13), 2),
          q.z(q.pair(2), q.pt(5), 3),
          cstack(q.z(q.ptp(5), q.pair(20), 3), {q.z(q.ptp(5), q.pair(13), 2)}),
          cstack(q.z(q.ptp(5), q.pair(13), 2),
                 {q.zneg(q.pair(13), q.pair(20))}),
          cstack(q.z(q.pt(5), q.ptp(5), 1),
                 {q.z(q.pair(2), q.pt(5), 2), q.z(q.ptp(5), q.pair(20), 2),
                  q.z(q.ptp(5), q.pair(13), 2)}),
          q.z(q.pair(1), q.pt(5), 2),
          cstack(above(q.z(q.pair(1), q.ptp(5), 2), {f.strand({5, false})}),
                 {q.z(q.ptp(5), q.pair(20), 2), q.z(q.ptp(5), q.pair(13), 2)}),
      };
      p.f_list = {
          q.z(q.pair(2), q.pt(13), 3),
          q.z(q.ptp(13), q.pt(20), 2),
          cstack(q.z(q.pt(13), q.pt(20), 2), {q.z(q.pair(2), q.pt(13), 2)}),
          cstack(q.z(q.pair(2), q.pt(20), 3), {q.z(q.pair(2), q.pt(13), 2)}),
          q.tilde(tp[0]),
          q.tilde(tp[1]),
      };
      p.rho = {{q.z(q.pt(20), q.ptp(20), 1), -1},
               {q.z(q.pt(13), q.ptp(13), 1), -1}};
      p.ff_conj = {q.z(q.pair(2), q.pt(5), 2), q.z(q.pair(1), q.pt(5), 2)};
      p.group_conj = {{q.z(q.pair(2), q.pt(4), 2), 1},
                      {q.z(q.pair(1), q.pt(4), 2), 1}};
      break;
    }
    case 4: {
      p.main_before_group = {
          q.z(q.ptp(4), q.pair(7), 2),
          cstack(q.z(q.ptp(4), q.pair(8), 2), {q.z(q.ptp(4), q.pair(7), 2)}),
          q.z(q.pair(3), q.pt(4), 3),
          cstack(q.z(q.ptp(4), q.pair(15), 3),
                 {q.z(q.ptp(4), q.pair(8), 2), q.z(q.ptp(4), q.pair(7), 2)}),
          cstack(q.z(q.ptp(4), q.pair(8), 2),
                 {{q.z(q.ptp(4), q.pair(7), 2), 1},
                  {q.zneg(q.pair(8), q.pair(15)), 1}}),
          cstack(q.z(q.ptp(4), q.pair(7), 2),
                 {q.zneg(q.pair(7), q.pair(8)), q.zneg(q.pair(7), q.pair(15))}),
          cstack(q.z(q.pt(4), q.ptp(4), 1),
                 {q.z(q.pair(3), q.pt(4), 2), q.z(q.ptp(4), q.pair(15), 2),
                  q.z(q.ptp(4), q.pair(8), 2), q.z(q.ptp(4), q.pair(7), 2)}),
          // as at vertex 2, the printed stack's extra Z^2_{4 4'} breaks
          // the local identity
          cstack(q.z(q.pt(4), q.pair(21), 2),
                 {q.z(q.pt(4), q.pair(15), 2), q.z(q.pt(4), q.pair(8), 2),
                  q.z(q.pt(4), q.pair(7), 2), q.z(q.pair(3), q.pt(4), 2)}),
          cstack(q.z(q.ptp(4), q.pair(21), 2),
                 {q.z(q.ptp(4), q.pair(15), 2), q.z(q.ptp(4), q.pair(8), 2),
                  q.z(q.ptp(4), q.pair(7), 2)}),
      };
      p.group_position = 9;
      p.g_before_ff = {
          q.z(q.ptp(8), q.pair(15), 2),
          q.z(q.pair(7), q.pt(8), 3),
          cstack(q.z(q.ptp(8), q.pair(21), 3), {q.z(q.ptp(8), q.pair(15), 2)}),
          cstack(q.z(q.ptp(8), q.pair(15), 2),
                 {q.zneg(q.pair(15), q.pair(21))}),
          cstack(q.z(q.pt(8), q.ptp(8), 1),
                 {q.z(q.pair(7), q.pt(8), 2), q.z(q.ptp(8), q.pair(21), 2),
                  q.z(q.ptp(8), q.pair(15), 2)}),
          q.z(q.pair(3), q.pt(8), 2),
          cstack(above(q.z(q.pair(3), q.ptp(8), 2), {f.strand({8, false})}),
                 {q.z(q.ptp(8), q.pair(21), 2), q.z(q.ptp(8), q.pair(15), 2)}),
      };
      p.f_list = {
          q.z(q.ptp(3), q.pt(7), 2),
          q.z(q.ptp(7), q.pair(15), 3),
          cstack(q.z(q.ptp(3), q.ptp(7), 2),
                 {q.z(q.ptp(7), q.pair(15), 2), q.z(q.ptp(3), q.pt(7), 2)}),
          cstack(q.z(q.ptp(3), q.pair(15), 3), {q.z(q.ptp(3), q.pt(7), 2)}),
          q.tilde(tp[0]),
          q.tilde(tp[1]),
      };
      p.rho = {{q.z(q.pt(7), q.ptp(7), 1), -1},
               {q.z(q.pt(3), q.ptp(3), 1), -1}};
      p.ff_conj = {q.z(q.pair(7), q.pt(8), 2), q.z(q.pair(3), q.pt(8), 2)};
      p.group_conj = {{q.z(q.pair(3), q.pt(4), 2), 1}};
      break;
    }
    case 5: {
      p.main_before_group = {q.z(q.ptp(5), q.pair(6), 3)};
      p.group_position = 1;
      p.main_after_group = {
          cstack(q.z(q.ptp(5), q.pair(22), 3), {q.z(q.ptp(5), q.pair(6), 2)}),
          cstack(q.z(q.pt(5), q.ptp(5), 1),
                 {q.z(q.ptp(5), q.pair(22), 2), q.z(q.ptp(5), q.pair(6), 2)}),
          cstack(q.z(q.pt(5), q.pair(16), 2),
                 {q.z(q.pt(5), q.ptp(5), 2), q.z(q.ptp(5), q.pair(6), 2)}),
          cstack(q.z(q.ptp(5), q.pair(16), 2), {q.z(q.ptp(5), q.pair(6), 2)}),
          cstack(q.z(q.pt(5), q.pair(11), 2),
                 {q.z(q.pt(5), q.ptp(5), 2), q.z(q.ptp(5), q.pair(6), 2)}),
          cstack(q.z(q.ptp(5), q.pair(11), 2), {q.z(q.ptp(5), q.pair(6), 2)}),
          cstack(q.z(q.pt(5), q.pair(9), 2),
                 {q.z(q.pt(5), q.ptp(5), 2), q.z(q.ptp(5), q.pair(6), 2)}),
          cstack(q.z(q.ptp(5), q.pair(9), 2), {q.z(q.ptp(5), q.pair(6), 2)}),
      };
      p.ff_inside_g = true;
      p.g_before_ff = {
          q.z(q.pair(6), q.pt(9), 2),
          q.z(q.ptp(9), q.pair(11), 3),
          cstack(q.z(q.pair(6), q.ptp(9), 2),
                 {q.z(q.pair(6), q.pt(9), 2), q.z(q.ptp(9), q.pair(11), 2)}),
      };
      p.g_after_ff = {
          cstack(q.z(q.ptp(9), q.pair(22), 2), {q.z(q.ptp(9), q.pair(11), 2)}),
          q.z(q.pt(9), q.pair(22), 2),
          cstack(q.z(q.ptp(9), q.pair(16), 3), {q.z(q.ptp(9), q.pair(11), 2)}),
          cstack(q.z(q.pt(9), q.ptp(9), 1),
                 {q.z(q.ptp(9), q.pair(16), 2), q.z(q.ptp(9), q.pair(11), 2)}),
      };
      p.f_list = {
          q.z(q.ptp(6), q.pt(11), 2),
          q.z(q.ptp(11), q.pair(16), 3),
          cstack(q.z(q.ptp(6), q.ptp(11), 2),
                 {q.z(q.ptp(11), q.pair(16), 2), q.z(q.ptp(6), q.pt(11), 2)}),
          cstack(q.z(q.ptp(6), q.pair(16), 3), {q.z(q.ptp(6), q.pt(11), 2)}),
          q.tilde(tp[0]),
          q.tilde(tp[1]),
      };
      p.rho = {{q.z(q.pt(11), q.ptp(11), 1), -1},
               {q.z(q.pt(6), q.ptp(6), 1), -1}};
      p.ff_conj = {q.z(q.pair(6), q.pair(9), 2), q.z(q.ptp(9), q.pair(11), 2)};
      p.group_conj = {{q.z(q.ptp(5), q.pair(6), 2), 1}};
      break;
    }
    case 7: {
      p.main_before_group = {
          q.z(q.pair(8), q.pt(9), 2),
          q.z(q.ptp(9), q.pair(10), 2),
          cstack(q.z(q.ptp(9), q.pair(12), 3), {q.z(q.ptp(9), q.pair(10), 2)}),
          cstack(q.z(q.ptp(9), q.pair(10), 2),
                 {q.zneg(q.pair(10), q.pair(12))}),
          cstack(q.z(q.pair(8), q.ptp(9), 2),
                 {q.z(q.ptp(9), q.pair(12), 2), q.z(q.ptp(9), q.pair(10), 2),
                  q.z(q.pair(8), q.pt(9), 2)}),
      };
      p.group_position = 5;
      p.main_after_group = {
          cstack(q.z(q.ptp(9), q.pair(23), 2),
                 {q.z(q.ptp(9), q.pair(12), 2), q.z(q.ptp(9), q.pair(10), 2)}),
          cstack(q.z(q.ptp(9), q.pair(18), 3),
                 {q.z(q.ptp(9), q.pair(12), 2), q.z(q.ptp(9), q.pair(10), 2)}),
          q.z(q.pt(9), q.pair(23), 2),
          cstack(q.z(q.pt(9), q.ptp(9), 1),
                 {q.z(q.ptp(9), q.pair(18), 2), q.z(q.ptp(9), q.pair(12), 2),
                  q.z(q.ptp(9), q.pair(10), 2)}),
      };
      p.ff_inside_g = true;
      p.g_before_ff = {q.z(q.ptp(8), q.pair(10), 3)};
      p.g_after_ff = {
          cstack(q.z(q.ptp(8), q.pair(23), 3), {q.z(q.ptp(8), q.pair(10), 2)}),
          cstack(q.z(q.pt(8), q.ptp(8), 1),
                 {q.z(q.ptp(8), q.pair(23), 2), q.z(q.ptp(8), q.pair(10), 2)}),
          cstack(q.z(q.ptp(8), q.pair(18), 2), {q.z(q.ptp(8), q.pair(10), 2)}),
          cstack(q.z(q.pt(8), q.pair(18), 2),
                 {q.z(q.pt(8), q.ptp(8), 2), q.z(q.ptp(8), q.pair(10), 2)}),
          cstack(q.z(q.ptp(8), q.pair(12), 2), {q.z(q.ptp(8), q.pair(10), 2)}),
          cstack(q.z(q.pt(8), q.pair(12), 2),
                 {q.z(q.pt(8), q.ptp(8), 2), q.z(q.ptp(8), q.pair(10), 2)}),
      };
      p.f_list = {
          q.z(q.pair(12), q.pt(18), 3),
          q.z(q.ptp(18), q.pt(23), 2),
          cstack(q.z(q.pt(18), q.pt(23), 2), {q.z(q.pair(12), q.pt(18), 2)}),
          cstack(q.z(q.pair(12), q.pt(23), 3), {q.z(q.pair(12), q.pt(18), 2)}),
          q.tilde(tp[0]),
          q.tilde(tp[1]),
      };
      p.rho = {{q.z(q.pt(23), q.ptp(23), 1), -1},
               {q.z(q.pt(18), q.ptp(18), 1), -1}};
      p.ff_conj = {q.z(q.ptp(8), q.pair(10), 2)};
      p.group_conj = {{q.z(q.pair(8), q.pair(9), 2), 1},
                      {q.z(q.ptp(9), q.pair(12), 2), 1},
                      {q.z(q.ptp(9), q.pair(10), 2), 1}};
      break;
    }
    case 9: {
      p.main_before_group = {
          q.z(q.ptp(14), q.pair(15), 2),
          q.z(q.pair(13), q.pt(14), 3),
          barred(q.z(q.ptp(14), q.pair(16), 3)),
          cstack(q.z(q.ptp(14), q.pair(15), 2),
                 {q.zneg(q.pair(15), q.pair(16))}),
          cstack(q.z(q.pt(14), q.ptp(14), 1),
                 {q.z(q.pair(13), q.pt(14), 2), q.z(q.ptp(14), q.pair(16), 2),
                  q.z(q.ptp(14), q.pair(15), 2)}),
          cstack(barred(q.z(q.pt(14), q.pair(17), 2)),
                 {q.z(q.pair(13), q.pt(14), 2)}),
          barred(q.z(q.ptp(14), q.pair(17), 2)),
          cstack(barred(q.z(q.pt(14), q.pair(18), 2)),
                 {q.z(q.pair(13), q.pt(14), 2)}),
          barred(q.z(q.ptp(14), q.pair(18), 2)),
      };
      p.group_position = 9;
      p.g_before_ff = {
          q.z(q.pair(16), q.pt(17), 2),
          q.z(q.ptp(17), q.pair(18), 3),
          q.z(q.pair(15), q.pt(17), 3),
          cstack(q.z(q.pair(16), q.pt(17), 2), {q.z(q.pair(15), q.pt(17), 2)}),
          cstack(q.z(q.pt(17), q.ptp(17), 1),
                 {q.z(q.ptp(17), q.pair(18), 2), q.z(q.pair(16), q.pt(17), 2),
                  q.z(q.pair(15), q.pt(17), 2)}),
          q.z(q.pair(13), q.pt(17), 2),
          cstack(above(q.z(q.pair(13), q.ptp(17), 2), {f.strand({17, false})}),
                 {q.z(q.ptp(17), q.pair(18), 2)}),
      };
      p.f_list = {
          q.z(q.ptp(13), q.pair(15), 3),
          q.z(q.pair(16), q.pt(18), 3),
          q.tilde(tp[0]),
          q.tilde(tp[1]),
          cstack(q.z(q.ptp(13), q.pt(18), 2),
                 {q.z(q.ptp(13), q.pair(15), 2)}),
          q.z(q.pt(13), q.pt(18), 2),
      };
      p.rho = {{q.z(q.pt(18), q.ptp(18), 1), -1},
               {q.z(q.pt(13), q.ptp(13), 1), -1}};
      p.ff_conj = {q.zneg(q.pt(17), q.pair(18))};
      p.group_conj = {{q.z(q.pair(13), q.pt(14), 2), 1}};
      break;
    }
    case 10: {
      p.main_before_group = {
          q.z(q.ptp(19), q.pair(20), 3),
          cstack(q.z(q.pt(24), q.ptp(24), 1),
                 {q.zneg(q.pair(22), q.pt(24)), q.zneg(q.pair(23), q.pt(24))}),
          q.z(q.pair(21), q.ptp(24), 2),
          barred(q.z(q.pair(22), q.pt(24), 3)),
          cstack(q.z(q.pair(21), q.pt(24), 2), {q.zneg(q.pair(23), q.pt(24))}),
      };
      p.group_position = 5;
      p.main_after_group = {
          q.z(q.pair(23), q.pt(24), 3),
          barred(q.z(q.ptp(19), q.pair(21), 3)),
          q.z(q.pt(19), q.pair(22), 2),
          q.z(q.pt(19), q.pair(23), 2),
          q.z(q.pt(19), q.pair(24), 2),
      };
      p.ff_inside_g = true;
      p.g_before_ff = {
          q.z(q.pair(20), q.ptp(24), 2),
          cstack(q.z(q.pair(20), q.pt(24), 2), {q.zneg(q.pair(23), q.pt(24))}),
      };
      p.g_after_ff = {
          q.z(q.ptp(19), q.pair(22), 2),
          q.z(q.ptp(19), q.pair(23), 2),
          q.z(q.ptp(19), q.pair(24), 2),
          cstack(q.z(q.pt(19), q.ptp(19), 1), {q.z(q.ptp(19), q.pair(21), 2)}),
      };
      p.f_list = {
          q.z(q.ptp(20), q.pair(21), 3),
          q.z(q.pair(22), q.pt(23), 3),
          q.tilde(tp[0]),
          q.tilde(tp[1]),
          cstack(q.z(q.ptp(20), q.pt(23), 2),
                 {q.z(q.ptp(20), q.pair(21), 2)}),
          q.z(q.pt(20), q.pt(23), 2),
      };
      p.rho = {{q.z(q.pt(23), q.ptp(23), 1), -1},
               {q.z(q.pt(20), q.ptp(20), 1), -1}};
      p.ff_conj = {q.zneg(q.pair(23), q.pt(24))};
      p.group_conj = {{q.z(q.ptp(19), q.pair(20), 2), 1}};
      break;
    }
    default:
      throw MalformedSpec("not a 6-point vertex");
  }
  return p;
}

std::vector<TwistFactor> six_point_monodromy(int vertex, const Frame& f,
                                             const std::array<TildePath, 2>& tp) {
  SixPointParts p = six_parts(vertex, f, tp);
  const std::string pre = "phi" + std::to_string(vertex);
  // F* = per-factor conjugation of F, order preserved.
  std::vector<TwistSpec> fstar = p.f_list;
  for (const auto& [h, pow] : p.rho) conj_each(fstar, h, pow);
  std::vector<TwistSpec> ff = p.f_list;
  ff.insert(ff.end(), fstar.begin(), fstar.end());
  for (const auto& h : p.ff_conj) conj_each(ff, h);
  // group = G with F F* inserted (inside or appended), then the outer stack.
  std::vector<TwistSpec> group = p.g_before_ff;
  group.insert(group.end(), ff.begin(), ff.end());
  group.insert(group.end(), p.g_after_ff.begin(), p.g_after_ff.end());
  for (const auto& [h, pow] : p.group_conj) conj_each(group, h, pow);

  std::vector<TwistFactor> out = tag(p.main_before_group, pre);
  const std::size_t nf = p.f_list.size(), ng = p.g_before_ff.size();
  for (std::size_t i = 0; i < group.size(); ++i) {
    std::string where;
    if (i < ng)
      where = pre + "/G[" + std::to_string(i) + "]";
    else if (i < ng + nf)
      where = pre + "/F[" + std::to_string(i - ng) + "]";
    else if (i < ng + 2 * nf)
      where = pre + "/F*[" + std::to_string(i - ng - nf) + "]";
    else
      where = pre + "/G[" + std::to_string(i - 2 * nf) + "]";
    out.push_back({group[i], group[i].kind(), where});
  }
  auto tail = tag(p.main_after_group, pre + "+");
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<TwistFactor> three_point_monodromy(int vertex, const Frame& f) {
  const auto& tr = three_point_lines(vertex);
  const int i = tr[0], j = tr[1], k = tr[2];
  const B q{f};
  const std::string pre = "phi" + std::to_string(vertex);
  const TwistSpec cjk = q.z(q.pair(j), q.pt(k), 2);
  const TwistSpec cik = q.z(q.pair(i), q.pt(k), 2);
  std::vector<TwistSpec> specs;
  specs.push_back(q.z(q.pair(j), q.pt(k), 3));
  const std::array<std::pair<bool, bool>, 4> prim = {
      {{false, false}, {true, false}, {false, true}, {true, true}}};
  for (const auto& [pi, pj] : prim) {
    Block bi = pi ? q.ptp(i) : q.pt(i);
    Block bj = pj ? q.ptp(j) : q.pt(j);
    specs.push_back(cstack(q.z(bi, bj, 1), {cjk}));
    specs.push_back(cstack(q.z(bi, bj, 1), {cjk}));
  }
  specs.push_back(q.z(q.pair(i), q.pt(k), 3));
  specs.push_back(cstack(q.z(q.pt(k), q.ptp(k), 1), {cjk, cik}));
  return tag(specs, pre);
}

}  // namespace

const std::array<int, 3>& three_point_lines(int vertex) {
  switch (vertex) {
    case 1: return kTriples[0];
    case 3: return kTriples[1];
    case 6: return kTriples[2];
    case 8: return kTriples[3];
  }
  throw MalformedSpec("not a 3-point vertex");
}

bool is_three_point(int vertex) {
  return vertex == 1 || vertex == 3 || vertex == 6 || vertex == 8;
}

const SixPointLines& six_point_lines(int vertex) {
  return six_point_table().at(vertex);
}

std::vector<int> SixPointLines::sorted() const {
  std::vector<int> v{diagonal[0], diagonal[1], vertical[0],
                     vertical[1], horizontal[0], horizontal[1]};
  std::sort(v.begin(), v.end());
  return v;
}

const std::array<TildePath, 2>& tilde_paths(int vertex) {
  return tilde_table().at(vertex);
}

std::vector<TwistFactor> vertex_monodromy(int vertex, const Frame& f) {
  if (is_three_point(vertex)) return three_point_monodromy(vertex, f);
  return six_point_monodromy(vertex, f, tilde_paths(vertex));
}

std::vector<TwistFactor> vertex_monodromy(int vertex, const Frame& f,
                                          const std::array<TildePath, 2>& tp) {
  return six_point_monodromy(vertex, f, tp);
}

Factorization assemble_factorization(const LineArrangement& arr) {
  const Frame g = Frame::global();
  Factorization fz;
  fz.ambient = g.system();
  for (int vertex = 10; vertex >= 1; --vertex) {
    for (int t : lines_with_smaller_endpoint(arr, vertex)) {
      auto block = regenerated_parasitic_block(arr, t);
      for (std::size_t i = 0; i < block.size(); ++i)
        fz.factors.push_back({block[i], SingularityKind::node,
                              "C" + std::to_string(vertex) + "/D" +
                                  std::to_string(t) + "[" + std::to_string(i) +
                                  "]"});
    }
    auto phi = vertex_monodromy(vertex, g);
    fz.factors.insert(fz.factors.end(), phi.begin(), phi.end());
  }
  return fz;
}

CensusCount census(const std::vector<TwistFactor>& factors) {
  CensusCount c;
  for (const auto& f : factors) {
    switch (f.kind) {
      case SingularityKind::branch: ++c.branch; break;
      case SingularityKind::node: ++c.nodes; break;
      case SingularityKind::cusp: ++c.cusps; break;
      case SingularityKind::tangency: ++c.tangency; break;
    }
  }
  return c;
}

bool six_point_local_identity(int vertex) {
  const Frame f = Frame::local(six_point_lines(vertex).sorted());
  const auto sys = f.system();
  BraidWord w(sys.count);
  for (const auto& fac : vertex_monodromy(vertex, f))
    w.append(compile_halftwist(fac.spec, sys));
  BraidWord rhs(sys.count);
  for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
  rhs.append(full_twist(sys.count));
  return burau_equal(w, rhs, 3, 0xabcd) && nf_equal(w, rhs);
}

std::string AuditReport::text() const {
  std::string s;
  s += "degree " + std::to_string(degree_total) + " = " +
       std::to_string(degree_three_points) + " + " +
       std::to_string(degree_six_points) + " + " +
       std::to_string(degree_parasitic) + "\n";
  s += "census cusps=" + std::to_string(counts.cusps) +
       " nodes=" + std::to_string(counts.nodes) +
       " branch=" + std::to_string(counts.branch) + "\n";
  s += std::string("permutation ") + (permutation_identity ? "id" : "NOT id") +
       "\n";
  if (burau_seeds)
    s += "burau(" + std::to_string(burau_seeds) + " seeds) " +
         (burau_match ? "match" : "MISMATCH") + "\n";
  if (!first_divergence.empty()) s += "divergence: " + first_divergence + "\n";
  return s;
}

AuditReport audit(const Factorization& f, AuditLevel level, int seeds) {
  AuditReport r;
  for (const auto& fac : f.factors) {
    const long long d = spec_degree(fac.spec);
    r.degree_total += d;
    if (fac.origin.rfind("C", 0) == 0)
      r.degree_parasitic += d;
    else {
      // origin "phiV..."
      const int v = std::stoi(fac.origin.substr(3, 2));
      if (is_three_point(v))
        r.degree_three_points += d;
      else
        r.degree_six_points += d;
    }
  }
  r.pass = r.degree_total == 2256 && r.degree_three_points == 108 &&
           r.degree_six_points == 756 && r.degree_parasitic == 1392;
  if (level == AuditLevel::degree) return r;

  r.counts = census(f.expanded());
  const bool census_ok = r.counts.cusps == 168 && r.counts.nodes == 840 &&
                         r.counts.branch == 72 && r.counts.tangency == 0 &&
                         r.counts.degree() == r.degree_total;
  r.pass = r.pass && census_ok;
  if (level == AuditLevel::census) return r;

  const BraidWord w = f.word();
  r.permutation_identity = is_pure(w);
  r.pass = r.pass && r.permutation_identity;
  if (level == AuditLevel::permutation) return r;

  const BraidWord target = full_twist(f.ambient.count);
  if (level == AuditLevel::burau || level == AuditLevel::normal_form) {
    r.burau_seeds = seeds;
    r.burau_match = burau_equal(w, target, seeds, 0x5eed);
    r.pass = r.pass && r.burau_match;
    if (!r.burau_match) {
      for (int v : {2, 4, 5, 7, 9, 10})
        if (!six_point_local_identity(v)) {
          r.first_divergence = "local identity fails at vertex " +
                               std::to_string(v);
          break;
        }
      if (r.first_divergence.empty())
        r.first_divergence = "all local identities hold; global interleaving";
    }
  }
  if (level == AuditLevel::normal_form) {
    r.nf_match = nf_equal(w, target);
    r.pass = r.pass && r.nf_match;
  }
  return r;
}

}  // namespace bmf
