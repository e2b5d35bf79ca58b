#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bmf/artin.hpp"
#include "bmf/disk.hpp"
#include "bmf/garside.hpp"
#include "bmf/transport.hpp"

using namespace bmf;

namespace {

// Independent oracle for a full twist of two adjacent blocks: the boundary
// twist of the covered stretch with the internal block twists removed,
//   Z^2_{A,B} = Delta^2_[A..B] * Delta_A^-2 * Delta_B^-2 .
// The barred variant is the letter-reversed word; negative powers invert.
BraidWord block_twist_oracle(int n, Block a, Block b, int sign, bool bar) {
  const int lo = a.lo, hi = b.hi, k = hi - lo + 1;
  BraidWord w(n);
  BraidWord stretch = full_twist(k);
  for (int g : stretch.letters()) w.push(g + lo - 1);
  if (a.size() == 2) {
    w.push(-a.lo);
    w.push(-a.lo);
  }
  if (b.size() == 2) {
    w.push(-b.lo);
    w.push(-b.lo);
  }
  if (bar) {
    BraidWord rev(n);
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) rev.push(*it);
    w = rev;
  }
  if (sign < 0) w = w.inverse();
  return w;
}

}  // namespace

TEST_CASE("simple halftwist compilation anchors") {
  auto sys3 = PunctureSystem::plain(3);
  // adjacent direct path -> sigma_k
  auto sk = compile_halftwist(twist(Block(1), Block(2), 1), sys3);
  CHECK(sk.letters() == std::vector<int>{1});

  // z_13 below 2: a conjugate of sigma_2 by sigma_1^-1
  auto below = compile_halftwist(twist(Block(1), Block(3), 1), sys3);
  CHECK(below.letters() == std::vector<int>{-2, 1, 2});
  CHECK(nf_equal(below, conjugate(BraidWord(3, {2}), BraidWord(3, {-1}))));

  // z_13 with P={2} equals the barred path
  auto withP = compile_halftwist(above(twist(Block(1), Block(3), 1), {2}), sys3);
  auto barP = compile_halftwist(barred(twist(Block(1), Block(3), 1)), sys3);
  CHECK(withP.letters() == barP.letters());
  CHECK(withP.letters() == std::vector<int>{2, 1, -2});

  // permutation of a compiled twist: endpoint transposition for odd eps,
  // identity for even
  auto z2 = compile_halftwist(twist(Block(1), Block(3), 2), sys3);
  CHECK(is_pure(z2));
  auto z1 = compile_halftwist(twist(Block(1), Block(3), 1), sys3);
  auto p = permutation(z1);
  CHECK(p == std::vector<int>{2, 1, 0});
}

TEST_CASE("block full twist formulas in local models") {
  // one doubled side, B_3
  auto sys3 = PunctureSystem::plain(3);
  for (int sign : {1, -1}) {
    for (bool bar : {false, true}) {
      // Z_{ii',j}: blocks {1,2},{3}
      {
        TwistSpec s = with_sign(twist(Block(1, 2), Block(3), 2), sign);
        if (bar) s = barred(s);
        auto lhs = block_twist_oracle(3, Block(1, 2), Block(3), sign, bar);
        auto rhs = compile_halftwist(s, sys3);
        INFO("left block, sign=", sign, " bar=", bar);
        CHECK(nf_equal(lhs, rhs));
      }
      // Z_{i',jj'}: blocks {1},{2,3}
      {
        TwistSpec s = with_sign(twist(Block(1), Block(2, 3), 2), sign);
        if (bar) s = barred(s);
        auto lhs = block_twist_oracle(3, Block(1), Block(2, 3), sign, bar);
        auto rhs = compile_halftwist(s, sys3);
        INFO("right block, sign=", sign, " bar=", bar);
        CHECK(nf_equal(lhs, rhs));
      }
    }
  }
  // both sides doubled, B_4
  auto sys4 = PunctureSystem::plain(4);
  for (int sign : {1, -1}) {
    for (bool bar : {false, true}) {
      TwistSpec s = with_sign(twist(Block(1, 2), Block(3, 4), 2), sign);
      if (bar) s = barred(s);
      auto lhs = block_twist_oracle(4, Block(1, 2), Block(3, 4), sign, bar);
      auto rhs = compile_halftwist(s, sys4);
      INFO("2x2 block, sign=", sign, " bar=", bar);
      CHECK(nf_equal(lhs, rhs));
    }
  }
}

TEST_CASE("block expansions match the stated factor lists") {
  // Z^2_{ii',j} -> [Z^2_{i'j}, Z^2_{ij}]
  auto e1 = expand_macro(twist(Block(1, 2), Block(3), 2));
  REQUIRE(e1.size() == 2);
  CHECK(e1[0].a == Block(2));
  CHECK(e1[1].a == Block(1));
  // Z^2_{ii',jj'} -> 4 simple nodes by nested expansion
  auto e2 = expand_all(twist(Block(1, 2), Block(3, 4), 2));
  CHECK(e2.size() == 4);
  for (const auto& s : e2) CHECK(s.eps == 2);
  // Z^3_{i,jj'} -> three cusps, exponent sum 9
  auto e3 = expand_all(twist(Block(1), Block(2, 3), 3));
  CHECK(e3.size() == 3);
  CHECK(spec_degree(twist(Block(1), Block(2, 3), 3)) == 9);
  CHECK(spec_degree(twist(Block(1, 2), Block(3, 4), 2)) == 8);
  CHECK(spec_degree(with_sign(twist(Block(1, 2), Block(3), 2), -1)) == -4);
  CHECK_THROWS_AS(expand_macro(twist(Block(1), Block(3), 1)),
                  MalformedSpec);
  CHECK_THROWS_AS(twist(Block(1, 2), Block(3), 1), MalformedSpec);
}

TEST_CASE("cusp triple: compiled shape") {
  auto sys3 = PunctureSystem::plain(3);
  // Z^3_{ii',j} on {1,2},{3}
  auto spec = twist(Block(1, 2), Block(3), 3);
  auto w = compile_halftwist(spec, sys3);
  CHECK(exponent_sum(w) == 9);
  // permutation = transposition of the doubled pair
  auto p = permutation(w);
  CHECK(p == std::vector<int>{1, 0, 2});
  // right-block form: permutation swaps the doubled pair on the right
  auto spec2 = twist(Block(1), Block(2, 3), 3);
  auto p2 = permutation(compile_halftwist(spec2, sys3));
  CHECK(p2 == std::vector<int>{0, 2, 1});
}

TEST_CASE("phi_1 derivation replay: the four proof-table rows") {
  // Local fiber of the first 3-point during partial regeneration:
  // punctures 1,3,19,19' at positions 1..4.
  PunctureSystem sys;
  sys.count = 4;
  sys.labels = {"1", "3", "19", "19'"};

  const BraidWord d2_3_19 =
      compile_halftwist(twist(Block(2), Block(3), 2), sys);  // Delta^2<3,19>
  const BraidWord d_1_3 =
      compile_halftwist(twist(Block(1), Block(2), 1), sys);  // Delta<1,3>

  auto direct = [&](int a, int b) {
    LanePath p;
    p.endpoint_a = a;
    p.endpoint_b = b;
    for (int c = a + 1; c < b; ++c) p.lanes[c] = Lane::below;
    p.extra_conj = BraidWord(sys.count);
    return p;
  };

  // Row 1: <3,19> under the identity stays z_{3 19}.
  {
    auto img = apply_braid_to_path(direct(2, 3), BraidWord(4), sys);
    CHECK(img.is_simple());
    CHECK(img.endpoint_a == 2);
    CHECK(img.endpoint_b == 3);
  }
  // Row 2: <1,3> under Delta^2<3,19> = z_{1 3} conjugated by Z^2_{3 19}.
  {
    auto img = apply_braid_to_path(direct(1, 2), d2_3_19, sys);
    LanePath claimed = direct(1, 2);
    claimed.conj.push_back({make_spec(twist(Block(2), Block(3), 2)), 1});
    CHECK(paths_equivalent(img, claimed, sys));
  }
  // Row 3: <3,19> under Delta<1,3> Delta^2<3,19> = z_{1 19} (plain, below).
  {
    auto img =
        apply_braid_to_path(direct(2, 3), compose(d_1_3, d2_3_19), sys);
    REQUIRE(img.is_simple());
    CHECK(img.endpoint_a == 1);
    CHECK(img.endpoint_b == 3);
    CHECK(img.lanes.at(2) == Lane::below);
  }
  // Row 4: <19,19'> under Delta^2<3,19> Delta<1,3> Delta^2<3,19>
  //        = z_{19 19'} conjugated by Z^2_{3 19} Z^2_{1 19}.
  {
    auto img = apply_braid_to_path(
        direct(3, 4), compose(std::vector{d2_3_19, d_1_3, d2_3_19}), sys);
    LanePath claimed = direct(3, 4);
    claimed.conj.push_back({make_spec(twist(Block(2), Block(3), 2)), 1});
    claimed.conj.push_back({make_spec(twist(Block(1), Block(3), 2)), 1});
    CHECK(paths_equivalent(img, claimed, sys));
  }
}

TEST_CASE("compile/transport compatibility on a random corpus") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);  // up to 8 punctures
    auto sys = PunctureSystem::plain(n);
    const int a = 1 + static_cast<int>(rng() % (n - 1));
    int b = a + 1 + static_cast<int>(rng() % (n - a));
    if (b > n) b = n;
    LanePath p;
    p.endpoint_a = a;
    p.endpoint_b = b;
    for (int c = a + 1; c < b; ++c)
      p.lanes[c] = rng() % 2 ? Lane::above : Lane::below;
    p.extra_conj = BraidWord(n);
    BraidWord w(n);
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % (n - 1));
      w.push(rng() % 2 ? g : -g);
    }
    auto img = apply_braid_to_path(p, w, sys);
    CHECK(braid_equal_exact(compile_path(img, sys),
                            conjugate(compile_path(p, sys), w)));
  }
}
