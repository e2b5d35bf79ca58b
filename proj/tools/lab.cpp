// Scratch harness for pinning global conventions (not part of the shipped
// test suite).
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/pillow.hpp"
#include "bmf/regen.hpp"

using namespace bmf;

int main() {
  const auto arr = build_pillow();
  std::printf("arrangement reconstructed:\n");
  for (int t = 1; t <= 24; ++t) {
    const auto& [a, b] = arr.lines[static_cast<std::size_t>(t - 1)];
    std::printf("  line %2d = (%d,%d)\n", t, a, b);
  }
  const auto dj = disjoint_pairs(arr);
  std::printf("disjoint pairs: %zu\n", dj.pairs.size());

  const auto sys24 = PunctureSystem::plain(24);
  const BraidWord target = full_twist(24);

  auto assemble = [&](bool c_first, bool reverse_vertices) {
    BraidWord w(24);
    for (int step = 0; step < 10; ++step) {
      const int j = reverse_vertices ? 10 - step : step + 1;
      auto cpart = compile_product(build_parasitic_product(arr, j), sys24);
      auto vpart = compile_product(vertex_full_twist_specs(arr, j), sys24);
      if (c_first) {
        w.append(cpart);
        w.append(vpart);
      } else {
        w.append(vpart);
        w.append(cpart);
      }
    }
    return w;
  };

  for (bool c_first : {true, false}) {
    for (bool rev : {false, true}) {
      auto w = assemble(c_first, rev);
      std::printf("combo c_first=%d rev=%d: letters=%zu expsum=%lld ",
                  c_first, rev, w.size(), exponent_sum(w));
      const bool eq = burau_equal(w, target, 2);
      std::printf("burau_equal=%s\n", eq ? "YES" : "no");
    }
  }
  return 0;
}
