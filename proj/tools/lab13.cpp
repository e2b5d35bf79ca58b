// Scratch: the only lane bits visible in the failing sub-models.
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

// from lab12
namespace lab12 {
#include "lab12_phi2.inc"
}

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

  for (std::uint32_t g7at5 : {0u, 16u})
    for (std::uint32_t m9 : {0u, 1u})
      for (std::uint32_t c13 : {0u, 1u})
        for (std::uint32_t c5 : {0u, 1u}) {
          lab12::Knobs k;
          k.g7 = g7at5;
          k.m9 = m9;
          k.m9c13 = c13;
          k.m9c5 = c5;
          const BraidWord w = lab12::phi2_with(f12, k);
          const bool p15 =
              burau_equal(project(w, {1, 5}), project(rhs, {1, 5}), 2, 7);
          const bool p420 =
              burau_equal(project(w, {4, 20}), project(rhs, {4, 20}), 2, 7);
          const bool full = p15 && p420 && burau_equal(w, rhs, 2, 13);
          std::printf("g7@5=%u m9@4'=%u c13@4'=%u c5@4'=%u  {1,5}:%s "
                      "{4,20}:%s full:%s\n",
                      g7at5 ? 1 : 0, m9, c13, c5, p15 ? "pass" : "fail",
                      p420 ? "pass" : "fail", full ? "PASS" : "fail");
        }
  return 0;
}
