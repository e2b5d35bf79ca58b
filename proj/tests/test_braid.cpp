#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bmf/artin.hpp"
#include "bmf/braid.hpp"
#include "bmf/burau.hpp"
#include "bmf/garside.hpp"

using namespace bmf;

static BraidWord W(int n, std::initializer_list<int> ls) {
  return BraidWord(n, std::vector<int>(ls));
}

TEST_CASE("compose cancels adjacent inverse pairs") {
  auto w = compose(W(3, {1}), W(3, {-1}));
  CHECK(w.is_identity_word());
  auto uv = compose(W(3, {1}), W(3, {2}));
  CHECK(uv.size() == 2);
  CHECK_THROWS_AS(compose(W(3, {1}), W(4, {1})), AmbientMismatch);
}

TEST_CASE("conjugate is verbatim h^-1 g h") {
  auto g = W(3, {1});
  auto h = W(3, {2});
  auto c = conjugate(g, h);
  CHECK(c.letters() == std::vector<int>{-2, 1, 2});
  CHECK(exponent_sum(conjugate(W(3, {1, 1, 2}), W(3, {2, -1}))) == 3);
}

TEST_CASE("permutation and exponent sum homomorphisms") {
  auto p = permutation(W(3, {1}));
  CHECK(p == std::vector<int>{1, 0, 2});
  CHECK(is_pure(full_twist(5)));
  CHECK(exponent_sum(full_twist(48)) == 2256);
  CHECK(exponent_sum(full_twist(3)) == 6);
  CHECK(exponent_sum(BraidWord(7)) == 0);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    auto rand_word = [&](int len) {
      BraidWord w(n);
      for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng() % (n - 1));
        w.push(rng() % 2 ? g : -g);
      }
      return w;
    };
    auto u = rand_word(10), v = rand_word(10);
    auto uv = compose(u, v);
    CHECK(exponent_sum(uv) == exponent_sum(u) + exponent_sum(v));
    auto pu = permutation(u), pv = permutation(v), puv = permutation(uv);
    for (int i = 0; i < n; ++i)
      CHECK(puv[static_cast<std::size_t>(i)] ==
            pv[static_cast<std::size_t>(pu[static_cast<std::size_t>(i)])]);
  }
}

TEST_CASE("garside normal form basics") {
  CHECK(normal_form(W(3, {1, 2, 1})) == normal_form(W(3, {2, 1, 2})));
  auto mixed = normal_form(W(3, {1, -2}));
  CHECK(mixed.delta_power < 0);
  CHECK(!(mixed == normal_form(BraidWord(3))));

  auto ft3 = normal_form(full_twist(3));
  CHECK(ft3.delta_power == 2);
  CHECK(ft3.canonical_factors.empty());

  auto ft5 = normal_form(full_twist(5));
  CHECK(ft5.delta_power == 2);
  CHECK(ft5.canonical_factors.empty());

  // Delta^2 is central: exhaustively for n <= 8.
  for (int n = 2; n <= 8; ++n) {
    auto d2 = full_twist(n);
    for (int i = 1; i < n; ++i) {
      auto gi = BraidWord(n, {i});
      CHECK(nf_equal(compose(d2, gi), compose(gi, d2)));
    }
  }
}

TEST_CASE("normal form depends only on the group element") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    BraidWord w(n);
    for (int i = 0; i < 25; ++i) {
      int g = 1 + static_cast<int>(rng() % (n - 1));
      w.push(rng() % 2 ? g : -g);
    }
    auto nf = normal_form(w);
    auto w2 = nf_to_word(nf);
    CHECK(normal_form(w2) == nf);
    CHECK(artin_equal(w, w2));
  }
}

TEST_CASE("artin action convention and oracle agreement") {
  // sigma_1 in B_2: x1 -> x1 x2 x1^-1, x2 -> x1
  auto img = artin_action(W(2, {1}));
  CHECK(img.images[0].letters() == std::vector<int>{1, 2, -1});
  CHECK(img.images[1].letters() == std::vector<int>{1});

  auto id_img = artin_action(BraidWord(4));
  for (int i = 0; i < 4; ++i)
    CHECK(id_img.images[static_cast<std::size_t>(i)].letters() ==
          std::vector<int>{i + 1});

  CHECK(artin_equal(W(3, {1, 2, 1}), W(3, {2, 1, 2})));
  CHECK(artin_invariants_hold(artin_action(W(4, {1, -3, 2, 2, -1}))));

  // Equality verdicts agree with Garside on random word pairs.
  std::mt19937 rng(13);
  int equal_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);  // B_4..B_8
    auto rand_word = [&](int len) {
      BraidWord w(n);
      for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng() % (n - 1));
        w.push(rng() % 2 ? g : -g);
      }
      return w;
    };
    BraidWord u = rand_word(12);
    BraidWord v;
    if (trial % 2) {
      // same element, different word
      v = nf_to_word(normal_form(u));
      ++equal_seen;
    } else {
      v = rand_word(12);
    }
    const bool nf_eq = nf_equal(u, v);
    const bool fg_eq = artin_equal(u, v);
    CHECK(nf_eq == fg_eq);
    if (trial % 2) CHECK(nf_eq);
  }
  CHECK(equal_seen == 1000);
}

TEST_CASE("burau representation") {
  auto id = burau_eval(BraidWord(4), 12345);
  CHECK(id == burau_identity(4));
  CHECK_THROWS(burau_eval(W(3, {1}), 0));

  // braid relation holds for random t
  std::mt19937_64 rng(17);
  for (int s = 0; s < 3; ++s) {
    std::uint64_t t = rng() % (kBurauPrime - 3) + 2;
    CHECK(burau_eval(W(3, {1, 2, 1}), t) == burau_eval(W(3, {2, 1, 2}), t));
    CHECK(burau_eval(W(3, {1, -1}), t) == burau_identity(3));
  }

  // homomorphism: M(uv) = M(u) M(v)
  std::mt19937 rng2(19);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng2() % 4);
    auto rand_word = [&](int len) {
      BraidWord w(n);
      for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng2() % (n - 1));
        w.push(rng2() % 2 ? g : -g);
      }
      return w;
    };
    auto u = rand_word(15), v = rand_word(15);
    std::uint64_t t = rng2() % 1000000 + 2;
    CHECK(burau_mul(burau_eval(u, t), burau_eval(v, t)) ==
          burau_eval(compose(u, v), t));
  }

  // full twist commutes with every generator image
  std::uint64_t t = 987654321;
  auto ft = burau_eval(full_twist(4), t);
  for (int i = 1; i <= 3; ++i) {
    auto gi = burau_eval(W(4, {i}), t);
    CHECK(burau_mul(ft, gi) == burau_mul(gi, ft));
  }

  CHECK(burau_equal(W(4, {1, 3, 2, 2}), W(4, {3, 1, 2, 2})));
  CHECK(!burau_equal(W(4, {1}), W(4, {2})));
}
