// Scratch: six-point local identities and tilde-path lane search.
#include <cstdio>

#include "bmf/monodromy.hpp"

using namespace bmf;

// All points of the local frame strictly between the tilde endpoints.
static std::vector<LabelPoint> between(const Frame& f, const TildePath& tp) {
  const int sa = f.strand(tp.from), sb = f.strand(tp.to);
  const int lo = std::min(sa, sb), hi = std::max(sa, sb);
  std::vector<LabelPoint> out;
  for (int s = lo + 1; s < hi; ++s) {
    const int idx = (s - 1) / 2;
    out.push_back({f.lines[static_cast<std::size_t>(idx)], s % 2 == 0});
  }
  return out;
}

int main(int argc, char** argv) {
  const bool search = argc > 1;
  for (int v : {2, 4, 5, 7, 9, 10}) {
    if (!search) {
      std::printf("vertex %d local identity: %s\n", v,
                  six_point_local_identity(v) ? "YES" : "no");
      continue;
    }
    // search over lane assignments of the two tilde paths
    const Frame f = Frame::local(six_point_lines(v).sorted());
    const auto sys = f.system();
    BraidWord rhs(sys.count);
    for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
    rhs.append(full_twist(sys.count));

    auto base = tilde_paths(v);
    const auto b0 = between(f, base[0]);
    const auto b1 = between(f, base[1]);
    bool found = false;
    for (std::uint32_t m0 = 0; m0 < (1u << b0.size()) && !found; ++m0) {
      for (std::uint32_t m1 = 0; m1 < (1u << b1.size()) && !found; ++m1) {
        std::array<TildePath, 2> tp = base;
        tp[0].above.clear();
        tp[1].above.clear();
        for (std::size_t i = 0; i < b0.size(); ++i)
          if ((m0 >> i) & 1) tp[0].above.push_back(b0[i]);
        for (std::size_t i = 0; i < b1.size(); ++i)
          if ((m1 >> i) & 1) tp[1].above.push_back(b1[i]);
        BraidWord w(sys.count);
        for (const auto& fac : vertex_monodromy(v, f, tp))
          w.append(compile_halftwist(fac.spec, sys));
        if (burau_equal(w, rhs, 2, 77)) {
          std::printf("vertex %d: tilde lanes found m0=%u m1=%u above0={", v,
                      m0, m1);
          for (const auto& p : tp[0].above)
            std::printf("%d%s ", p.label, p.prime ? "'" : "");
          std::printf("} above1={");
          for (const auto& p : tp[1].above)
            std::printf("%d%s ", p.label, p.prime ? "'" : "");
          std::printf("}\n");
          found = true;
        }
      }
    }
    if (!found) std::printf("vertex %d: NO lane combo works\n", v);
  }
  return 0;
}
