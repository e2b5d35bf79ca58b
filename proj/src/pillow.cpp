#include "bmf/pillow.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bmf {

namespace {

// Index sets of the parasitic products D_t as printed: p < t with p and t
// disjoint.  D_1 = D_2 = D_4 = Id.
const std::vector<std::vector<int>>& dt_tables() {
  static const std::vector<std::vector<int>> tables = [] {
    std::vector<std::vector<int>> d(25);
    auto range = [](int lo, int hi, std::vector<int> skip = {}) {
      std::vector<int> v;
      for (int i = lo; i <= hi; ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end())
          v.push_back(i);
      return v;
    };
    d[3] = {2};
    d[5] = {3};
    d[6] = {1, 3, 4};
    d[7] = {1, 2, 5, 6};
    d[8] = {1, 2, 5, 6};
    d[9] = {1, 2, 3, 4, 7};
    d[10] = range(1, 6);
    d[11] = {1, 2, 3, 4, 7, 8, 10};
    d[12] = range(1, 7);
    d[13] = range(3, 12, {4, 5});
    d[14] = range(1, 12, {2, 6});
    d[15] = range(1, 12, {3, 4, 7, 8});
    d[16] = range(1, 12, {5, 6, 9, 11});
    d[17] = range(1, 12, {7, 10});
    d[18] = range(1, 11, {8, 9, 10});
    d[19] = range(2, 18, {3});
    d[20] = range(3, 18, {4, 5, 13});
    d[21] = range(1, 18, {3, 4, 7, 8, 15});
    d[22] = range(1, 18, {5, 6, 9, 11, 16});
    d[23] = range(1, 17, {8, 9, 10, 12});
    d[24] = range(1, 18, {11, 12});
    return d;
  }();
  return tables;
}

const std::vector<ParasiticDecoration>& dt_decorations() {
  static const std::vector<ParasiticDecoration> decos = [] {
    std::vector<ParasiticDecoration> d(25);
    auto below = [&](int t, std::vector<int> p) { d[t] = {true, std::move(p)}; };
    for (int t = 1; t <= 24; ++t) d[t] = {true, {}};
    d[3].bar = false;  // the one undecorated product in the table
    below(6, {5});
    below(9, {8});
    below(10, {8, 9});
    below(12, {11});
    below(14, {13});
    below(15, {13, 14});
    below(16, {13, 14, 15});
    below(17, {13, 14, 15, 16});
    below(18, {13, 14, 15, 16, 17});
    below(20, {19});
    below(21, {19, 20});
    below(22, {19, 20, 21});
    below(23, {19, 20, 21, 22});
    below(24, {19, 20, 21, 22, 23});
    return d;
  }();
  return decos;
}

// The lines through each corner (3-point); fixed by the computations for
// the local monodromies.
constexpr std::array<std::array<int, 3>, 4> kCornerTriples = {{
    {1, 3, 19},    // vertex 1
    {2, 6, 14},    // vertex 3
    {7, 10, 17},   // vertex 6
    {11, 12, 24},  // vertex 8
}};

int corner_slot(int v) {
  switch (v) {
    case 1: return 0;
    case 3: return 1;
    case 6: return 2;
    case 8: return 3;
  }
  return -1;
}

}  // namespace

std::vector<int> LineArrangement::lines_at(int vertex) const {
  std::vector<int> out;
  for (int t = 1; t <= kLines; ++t) {
    const auto& [a, b] = lines[static_cast<std::size_t>(t - 1)];
    if (a == vertex || b == vertex) out.push_back(t);
  }
  return out;
}

bool LineArrangement::meet(int p, int t) const {
  const auto& [a, b] = lines[static_cast<std::size_t>(p - 1)];
  const auto& [c, d] = lines[static_cast<std::size_t>(t - 1)];
  return a == c || a == d || b == c || b == d;
}

LineArrangement build_pillow() {
  const auto& dts = dt_tables();
  LineArrangement arr{};
  std::array<int, 11> degree{};  // per vertex
  std::array<int, 11> cap{};
  for (int v = 1; v <= 10; ++v)
    cap[static_cast<std::size_t>(v)] =
        (v == 1 || v == 3 || v == 6 || v == 8) ? 3 : 6;

  // Lines whose membership at a corner is prescribed.
  std::map<int, std::vector<int>> required_vertex;  // line -> forced vertices
  for (int slot = 0; slot < 4; ++slot) {
    const int v = std::array{1, 3, 6, 8}[static_cast<std::size_t>(slot)];
    for (int line : kCornerTriples[static_cast<std::size_t>(slot)])
      required_vertex[line].push_back(v);
  }

  std::function<bool(int)> place = [&](int t) -> bool {
    if (t > 24) return true;
    const auto [pa, pb] =
        t == 1 ? std::pair{0, 0} : arr.lines[static_cast<std::size_t>(t - 2)];
    for (int b = 2; b <= 10; ++b) {
      for (int a = 1; a < b; ++a) {
        // lexicographic: (a,b) > (pa,pb) ordered by (b,a)
        if (t > 1 && (b < pb || (b == pb && a <= pa))) continue;
        if (degree[static_cast<std::size_t>(a)] >=
                cap[static_cast<std::size_t>(a)] ||
            degree[static_cast<std::size_t>(b)] >=
                cap[static_cast<std::size_t>(b)])
          continue;
        // corner membership exactly as prescribed
        bool ok = true;
        for (int v : {1, 3, 6, 8}) {
          const auto& triple = kCornerTriples[static_cast<std::size_t>(
              corner_slot(v))];
          const bool should =
              std::find(triple.begin(), triple.end(), t) != triple.end();
          const bool has = (a == v || b == v);
          if (should != has) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        arr.lines[static_cast<std::size_t>(t - 1)] = {a, b};
        // disjointness against all earlier lines must match the tables
        for (int p = 1; p < t && ok; ++p) {
          const bool listed =
              std::find(dts[static_cast<std::size_t>(t)].begin(),
                        dts[static_cast<std::size_t>(t)].end(),
                        p) != dts[static_cast<std::size_t>(t)].end();
          if (listed == arr.meet(p, t)) ok = false;
        }
        if (!ok) continue;
        degree[static_cast<std::size_t>(a)]++;
        degree[static_cast<std::size_t>(b)]++;
        if (place(t + 1)) return true;
        degree[static_cast<std::size_t>(a)]--;
        degree[static_cast<std::size_t>(b)]--;
      }
    }
    return false;
  };
  if (!place(1))
    throw ArrangementError(
        "no endpoint assignment satisfies the parasitic tables");
  for (int v = 1; v <= 10; ++v)
    if (degree[static_cast<std::size_t>(v)] != cap[static_cast<std::size_t>(v)])
      throw ArrangementError("vertex degree mismatch after reconstruction");
  return arr;
}

DisjointnessTable disjoint_pairs(const LineArrangement& arr) {
  DisjointnessTable t;
  for (int p = 1; p <= LineArrangement::kLines; ++p)
    for (int q = p + 1; q <= LineArrangement::kLines; ++q)
      if (!arr.meet(p, q)) t.pairs.insert({p, q});
  return t;
}

const std::vector<int>& parasitic_index_set(int t) {
  if (t < 1 || t > 24) throw std::out_of_range("line index");
  return dt_tables()[static_cast<std::size_t>(t)];
}

const ParasiticDecoration& parasitic_decoration(int t) {
  if (t < 1 || t > 24) throw std::out_of_range("line index");
  return dt_decorations()[static_cast<std::size_t>(t)];
}

std::vector<TwistSpec> build_parasitic_block(const LineArrangement& arr,
                                             int t) {
  const auto& idx = parasitic_index_set(t);
  const auto& deco = parasitic_decoration(t);
  std::vector<TwistSpec> out;
  out.reserve(idx.size());
  for (int p : idx) {
    if (arr.meet(p, t))
      throw ArrangementError("parasitic table lists intersecting lines " +
                             std::to_string(p) + "," + std::to_string(t));
    TwistSpec s = twist(Block(p), Block(t), 2);
    if (deco.bar) s = barred(std::move(s));
    std::vector<int> flips;
    for (int q : deco.below)
      if (q > p && q < t) flips.push_back(q);
    s = lane_flips(std::move(s), flips);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> lines_with_smaller_endpoint(const LineArrangement& arr,
                                             int vertex) {
  std::vector<int> out;
  for (int t = 1; t <= LineArrangement::kLines; ++t)
    if (arr.lines[static_cast<std::size_t>(t - 1)].first == vertex)
      out.push_back(t);
  return out;
}

std::vector<TwistSpec> build_parasitic_product(const LineArrangement& arr,
                                               int vertex) {
  std::vector<TwistSpec> out;
  for (int t : lines_with_smaller_endpoint(arr, vertex)) {
    auto block = build_parasitic_block(arr, t);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<TwistSpec> vertex_full_twist_specs(const LineArrangement& arr,
                                               int vertex) {
  const auto s = arr.lines_at(vertex);
  const int k = static_cast<int>(s.size());
  std::vector<TwistSpec> out;
  // image of Delta^2_k under the sub-disk embedding: (g_1 ... g_{k-1})^k
  for (int rep = 0; rep < k; ++rep)
    for (int i = 0; i + 1 < k; ++i)
      out.push_back(twist(Block(s[static_cast<std::size_t>(i)]),
                          Block(s[static_cast<std::size_t>(i + 1)]), 1));
  return out;
}

}  // namespace bmf
