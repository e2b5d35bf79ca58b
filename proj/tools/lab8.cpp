// Scratch: solve the tilde windings of all three F shapes from the
// F F* identity, dedupe solutions, and confirm each against the full
// 12-strand local identities of both vertices sharing the shape.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

struct Shape {
  const char* name;
  std::vector<int> lines;               // the four F lines, ascending
  std::vector<TwistSpec> known_prefix;  // factors before the tildes
  std::vector<TwistSpec> known_suffix;  // factors after the tildes
  int t5_from, t5_to;                   // positions in the 8-strand model
  int t6_from, t6_to;
  BraidWord rho_conj;
  BraidWord target;
  int primary_vertex, sibling_vertex;
  std::map<int, int> exchange;  // primary line -> sibling line
};

static BraidWord target8(std::initializer_list<int> neg_pairs) {
  BraidWord w(8);
  w.append(full_twist(8));
  for (int rep = 0; rep < 2; ++rep)
    for (int a : neg_pairs) w.push(-a);
  return w;
}

static LabelPoint point_at(const std::vector<int>& lines, int pos) {
  return {lines[static_cast<std::size_t>((pos - 1) / 2)], pos % 2 == 0};
}

int main() {
  std::vector<Shape> shapes;
  {
    Shape s;
    s.name = "f2e1";
    s.lines = {1, 2, 13, 20};
    const SpecPtr c = make_spec(twist(Block(3, 4), Block(5), 2));
    s.known_prefix = {
        twist(Block(3, 4), Block(5), 3),
        twist(Block(6), Block(7), 2),
        conj_by(twist(Block(5), Block(7), 2), c),
        conj_by(twist(Block(3, 4), Block(7), 3), c),
    };
    s.t5_from = 1;
    s.t5_to = 4;
    s.t6_from = 2;
    s.t6_to = 3;
    BraidWord rc(8);
    rc.push(-7);
    rc.push(-5);
    s.rho_conj = rc;
    s.target = target8({5, 7, 1, 3});
    s.primary_vertex = 2;
    s.sibling_vertex = 7;
    s.exchange = {{1, 10}, {2, 12}, {13, 18}, {20, 23}};
    shapes.push_back(std::move(s));
  }
  {
    Shape s;
    s.name = "alpha4";
    s.lines = {3, 7, 15, 21};
    const SpecPtr c37 = make_spec(twist(Block(2), Block(3), 2));
    const SpecPtr c715 = make_spec(twist(Block(4), Block(5, 6), 2));
    s.known_prefix = {
        twist(Block(2), Block(3), 2),
        twist(Block(4), Block(5, 6), 3),
        conj_by(conj_by(twist(Block(2), Block(4), 2), c715), c37),
        conj_by(twist(Block(2), Block(5, 6), 3), c37),
    };
    s.t5_from = 5;
    s.t5_to = 8;
    s.t6_from = 6;
    s.t6_to = 7;
    BraidWord rc(8);
    rc.push(-3);
    rc.push(-1);
    s.rho_conj = rc;
    s.target = target8({1, 3, 5, 7});
    s.primary_vertex = 4;
    s.sibling_vertex = 5;
    s.exchange = {{3, 6}, {7, 11}, {15, 16}, {21, 22}};
    shapes.push_back(std::move(s));
  }
  {
    Shape s;
    s.name = "alpha9";
    s.lines = {13, 15, 16, 18};
    const SpecPtr c1315 = make_spec(twist(Block(2), Block(3, 4), 2));
    s.known_prefix = {
        twist(Block(2), Block(3, 4), 3),
        twist(Block(5, 6), Block(7), 3),
    };
    s.known_suffix = {
        conj_by(twist(Block(2), Block(7), 2), c1315),
        twist(Block(1), Block(7), 2),
    };
    s.t5_from = 3;
    s.t5_to = 6;
    s.t6_from = 4;
    s.t6_to = 5;
    BraidWord rc(8);
    rc.push(-7);
    rc.push(-1);
    s.rho_conj = rc;
    s.target = target8({1, 7, 3, 5});
    s.primary_vertex = 9;
    s.sibling_vertex = 10;
    s.exchange = {{13, 20}, {15, 21}, {16, 22}, {18, 23}};
    shapes.push_back(std::move(s));
  }

  const auto sys = PunctureSystem::plain(8);
  struct WindEntry {
    BraidWord w;
    std::vector<std::tuple<Block, Block, int>> parts;
  };
  std::vector<Block> blocks = {Block(1, 2), Block(3, 4), Block(5, 6),
                               Block(7, 8), Block(1),    Block(2),
                               Block(3),    Block(4),    Block(5),
                               Block(6),    Block(7),    Block(8)};
  std::vector<WindEntry> gs;
  gs.push_back({BraidWord(8), {}});
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (blocks[i].hi >= blocks[j].lo) continue;
      for (int e : {1, -1}) {
        TwistSpec t = with_sign(twist(blocks[i], blocks[j], 2), e);
        gs.push_back({compile_halftwist(t, sys),
                      {{blocks[i], blocks[j], e}}});
      }
    }
  const std::size_t singles = gs.size();
  for (std::size_t i = 1; i < singles; ++i)
    for (std::size_t j = 1; j < singles; ++j) {
      WindEntry e;
      e.w = compose(gs[i].w, gs[j].w);
      e.parts = gs[i].parts;
      e.parts.push_back(gs[j].parts[0]);
      gs.push_back(std::move(e));
    }

  const auto block_str = [](const Block& b) {
    std::string s = std::to_string(b.lo);
    if (b.size() == 2) s += "-" + std::to_string(b.hi);
    return s;
  };

  for (const auto& s : shapes) {
    const BraidWord pre = compile_product(s.known_prefix, sys);
    const BraidWord suf = compile_product(s.known_suffix, sys);
    std::map<std::string, int> seen;  // NF key of u -> count
    for (std::uint32_t m = 0; m < 4; ++m) {
      TwistSpec t5 = twist(Block(s.t5_from), Block(s.t5_to), 1);
      std::vector<int> fl;
      if (m & 1) fl.push_back(s.t5_from + 1);
      if (m & 2) fl.push_back(s.t5_from + 2);
      t5 = lane_flips(std::move(t5), fl);
      TwistSpec t6 = twist(Block(s.t6_from), Block(s.t6_to), 1);
      const BraidWord u0 =
          compose(compile_halftwist(t5, sys), compile_halftwist(t6, sys));
      for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        const BraidWord u = conjugate(u0, gs[gi].w);
        BraidWord F = pre;
        F.append(u);
        F.append(suf);
        BraidWord w = F;
        w.append(conjugate(F, s.rho_conj));
        if (!burau_equal(w, s.target, 2, 21)) continue;
        // dedupe by the class of u
        const BraidWord ucan = nf_to_word(normal_form(u));
        const std::string key = ucan.str();
        if (seen.count(key)) {
          seen[key]++;
          continue;
        }
        seen[key] = 1;
        // build label-space tilde data and confirm at 12 strands
        std::array<TildePath, 2> tp;
        tp[0].from = point_at(s.lines, s.t5_from);
        tp[0].to = point_at(s.lines, s.t5_to);
        if (m & 1) tp[0].above.push_back(point_at(s.lines, s.t5_from + 1));
        if (m & 2) tp[0].above.push_back(point_at(s.lines, s.t5_from + 2));
        tp[1].from = point_at(s.lines, s.t6_from);
        tp[1].to = point_at(s.lines, s.t6_to);
        for (const auto& [ba, bb, e] : gs[gi].parts) {
          LabelTwist lt;
          for (int p = ba.lo; p <= ba.hi; ++p)
            lt.a.push_back(point_at(s.lines, p));
          for (int p = bb.lo; p <= bb.hi; ++p)
            lt.b.push_back(point_at(s.lines, p));
          lt.sign = e;
          tp[0].conj.push_back(lt);
          tp[1].conj.push_back(lt);
        }
        const Frame f12 =
            Frame::local(six_point_lines(s.primary_vertex).sorted());
        const auto sys12 = f12.system();
        BraidWord lhs(12);
        for (const auto& fac : vertex_monodromy(s.primary_vertex, f12, tp))
          lhs.append(compile_halftwist(fac.spec, sys12));
        BraidWord rhs(12);
        for (int jj = 0; jj < 6; ++jj) rhs.push(-(2 * jj + 1));
        rhs.append(full_twist(12));
        const bool ok12 = burau_equal(lhs, rhs, 2, 31);
        std::printf("%s lanes=%u winding=[", s.name, m);
        for (const auto& [ba, bb, e] : gs[gi].parts)
          std::printf(" Z^%d_{%s,%s}", 2 * e, block_str(ba).c_str(),
                      block_str(bb).c_str());
        std::printf(" ]  12-strand(v%d): %s\n", s.primary_vertex,
                    ok12 ? "PASS" : "fail");
      }
    }
    std::printf("%s: %zu distinct u classes\n", s.name, seen.size());
  }
  return 0;
}
