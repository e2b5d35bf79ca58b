// Scratch: projection battery for a 6-point local identity.
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main(int argc, char** argv) {
  const int vertex = argc > 1 ? std::atoi(argv[1]) : 2;
  const Frame f12 = Frame::local(six_point_lines(vertex).sorted());
  const auto sys12 = f12.system();
  const std::vector<int> all = f12.lines;

  BraidWord lhs(12);
  for (const auto& fac : vertex_monodromy(vertex, f12))
    lhs.append(compile_halftwist(fac.spec, sys12));
  BraidWord rhs(12);
  for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
  rhs.append(full_twist(12));

  int fails = 0;
  for (std::uint32_t keep = 1; keep < 64; ++keep) {
    std::vector<int> del_pos;
    std::vector<int> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((keep >> i) & 1) {
        kept.push_back(all[i]);
      } else {
        del_pos.push_back(static_cast<int>(2 * i + 1));
        del_pos.push_back(static_cast<int>(2 * i + 2));
      }
    }
    if (kept.size() < 2) continue;
    auto l = delete_strands(lhs, del_pos);
    auto r = delete_strands(rhs, del_pos);
    if (!burau_equal(l, r, 2, 17)) {
      ++fails;
      std::printf("FAIL {");
      for (int k : kept) std::printf(" %d", k);
      std::printf(" }\n");
    }
  }
  std::printf("vertex %d: %d failing submodels\n", vertex, fails);
  return 0;
}
