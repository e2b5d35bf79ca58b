// Scratch: decisive order-convention experiments.
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main() {
  // 1. Do the two factors of the block formula commute?
  {
    auto sys3 = PunctureSystem::plain(3);
    auto e = expand_macro(twist(Block(1, 2), Block(3), 2));
    auto u = compile_halftwist(e[0], sys3);
    auto v = compile_halftwist(e[1], sys3);
    std::printf("lemma pair commutes: %s\n",
                nf_equal(compose(u, v), compose(v, u)) ? "YES" : "no");
    auto e4 = expand_all(twist(Block(1, 2), Block(3, 4), 2));
    auto sys4 = PunctureSystem::plain(4);
    bool all = true;
    for (std::size_t i = 0; i < e4.size(); ++i)
      for (std::size_t j = i + 1; j < e4.size(); ++j) {
        auto a = compile_halftwist(e4[i], sys4);
        auto b = compile_halftwist(e4[j], sys4);
        if (!nf_equal(compose(a, b), compose(b, a))) all = false;
      }
    std::printf("2x2 block expansion pairwise commutes: %s\n",
                all ? "YES" : "no");
  }
  // 2. Degenerated identity: all order combos.
  {
    const auto arr = build_pillow();
    const auto sys24 = PunctureSystem::plain(24);
    const BraidWord target = full_twist(24);
    for (bool rev_vertices : {false, true})
      for (bool c_first : {false, true})
        for (bool rev_inner : {false, true}) {
          BraidWord w(24);
          for (int step = 0; step < 10; ++step) {
            const int j = rev_vertices ? 10 - step : step + 1;
            auto cs = build_parasitic_product(arr, j);
            if (rev_inner) std::reverse(cs.begin(), cs.end());
            auto cpart = compile_product(cs, sys24);
            auto vpart = compile_product(vertex_full_twist_specs(arr, j), sys24);
            if (c_first) {
              w.append(cpart);
              w.append(vpart);
            } else {
              w.append(vpart);
              w.append(cpart);
            }
          }
          if (burau_equal(w, target, 2, 99))
            std::printf("degenerated PASS: rev_vertices=%d c_first=%d "
                        "rev_inner=%d\n",
                        rev_vertices, c_first, rev_inner);
        }
  }
  // 3. Do the parasitic factors commute among themselves?
  {
    const auto arr = build_pillow();
    const auto sys24 = PunctureSystem::plain(24);
    bool all = true;
    for (int j = 1; j <= 10 && all; ++j) {
      auto cs = build_parasitic_product(arr, j);
      for (std::size_t i = 0; i + 1 < cs.size() && all; ++i) {
        auto a = compile_halftwist(cs[i], sys24);
        auto b = compile_halftwist(cs[i + 1], sys24);
        if (!burau_equal(compose(a, b), compose(b, a), 2, 3))
          all = false;
      }
    }
    std::printf("adjacent parasitic factors commute: %s\n",
                all ? "YES" : "no");
  }
  return 0;
}
