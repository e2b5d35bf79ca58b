// Scratch: exact defects of the vertex-2 identity in the minimal failing
// sub-models {1,5} and {4,20}.
#include <cstdio>

#include "bmf/garside.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main() {
  const Frame f12 = Frame::local(six_point_lines(2).sorted());
  const auto sys12 = f12.system();
  const std::vector<int> all = f12.lines;

  std::array<TildePath, 2> tp;
  tp[0] = {{1, false}, {2, true}, {{1, true}},
           {LabelTwist{{{1, false}, {1, true}}, {{13, false}}, 2, -1, 1},
            LabelTwist{{{1, false}, {1, true}}, {{20, false}}, 2, -1, 1}}};
  tp[1] = {{1, true}, {2, false}, {}, tp[0].conj};

  BraidWord lhs(12);
  for (const auto& fac : vertex_monodromy(2, f12, tp))
    lhs.append(compile_halftwist(fac.spec, sys12));
  BraidWord rhs(12);
  for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
  rhs.append(full_twist(12));

  for (std::vector<int> kept : {std::vector<int>{1, 5},
                                std::vector<int>{4, 20},
                                std::vector<int>{1, 4, 5, 20}}) {
    std::vector<int> del_pos;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool keep = false;
      for (int k : kept)
        if (all[i] == k) keep = true;
      if (!keep) {
        del_pos.push_back(static_cast<int>(2 * i + 1));
        del_pos.push_back(static_cast<int>(2 * i + 2));
      }
    }
    auto l = delete_strands(lhs, del_pos);
    auto r = delete_strands(rhs, del_pos);
    std::printf("keep {");
    for (int k : kept) std::printf(" %d", k);
    std::printf(" } lhs deg=%lld rhs deg=%lld\n", exponent_sum(l),
                exponent_sum(r));
    auto defect = compose(l.inverse(), r);
    auto nf = normal_form(defect);
    std::printf("  defect: dpow=%lld len=%zu word=%s\n", nf.delta_power,
                nf.canonical_length(), nf_to_word(nf).str().c_str());
    auto p = permutation(defect);
    std::printf("  defect perm:");
    for (std::size_t i = 0; i < p.size(); ++i) std::printf(" %d", p[i] + 1);
    std::printf("\n");
  }
  return 0;
}
