#include "bmf/regen.hpp"

#include <algorithm>

namespace bmf {

PunctureSystem double_system(const PunctureSystem& base) {
  for (const auto& l : base.labels)
    if (!l.empty() && l.back() == '\'')
      throw InvalidState("system is already doubled");
  PunctureSystem s;
  s.count = 2 * base.count;
  s.labels.reserve(static_cast<std::size_t>(s.count));
  for (const auto& l : base.labels) {
    s.labels.push_back(l);
    s.labels.push_back(l + "'");
  }
  return s;
}

std::vector<TwistSpec> apply_rule(const TwistSpec& factor,
                                  RegenerationRule rule,
                                  RegenerationVariant variant) {
  if (factor.a.size() != 1 || factor.b.size() != 1)
    throw MalformedSpec("regeneration acts on simple factors");
  const int i = factor.a.lo, j = factor.b.lo;
  const Block di = doubled_block(i), dj = doubled_block(j);
  const auto lift_flips = [&](TwistSpec s) {
    for (int f : factor.flips) {
      s.flips.push_back(strand_of(f));
      s.flips.push_back(strand_of_prime(f));
    }
    return s;
  };
  switch (rule) {
    case RegenerationRule::first: {
      if (factor.eps != 1 || variant != RegenerationVariant::none)
        throw MalformedSpec("first rule rewrites branch factors");
      // Z_{ij} -> Z_{i j'} Z_{i' j}
      TwistSpec u = twist(Block(strand_of(i)), Block(strand_of_prime(j)), 1);
      TwistSpec v = twist(Block(strand_of_prime(i)), Block(strand_of(j)), 1);
      u.bar = v.bar = factor.bar;
      return {lift_flips(u), lift_flips(v)};
    }
    case RegenerationRule::second: {
      if (factor.eps != 2) throw MalformedSpec("second rule rewrites nodes");
      Block a = variant == RegenerationVariant::right_pair
                    ? Block(strand_of(i))
                    : di;
      Block b = variant == RegenerationVariant::left_pair
                    ? Block(strand_of(j))
                    : dj;
      if (variant == RegenerationVariant::none)
        throw MalformedSpec("second rule needs a variant");
      TwistSpec s = twist(a, b, 2);
      s.bar = factor.bar;
      s.sign = factor.sign;
      return {lift_flips(s)};
    }
    case RegenerationRule::third: {
      if (factor.eps != 4) throw MalformedSpec("third rule rewrites tangencies");
      Block a = variant == RegenerationVariant::left_pair ? di
                                                          : Block(strand_of(i));
      Block b = variant == RegenerationVariant::right_pair
                    ? dj
                    : Block(strand_of(j));
      if (variant != RegenerationVariant::left_pair &&
          variant != RegenerationVariant::right_pair)
        throw MalformedSpec("third rule needs a pair side");
      TwistSpec s = twist(a, b, 3);
      s.bar = factor.bar;
      return {lift_flips(s)};
    }
  }
  throw MalformedSpec("unknown rule");
}

std::vector<int> regenerated_decoration(int t) {
  const auto& deco = parasitic_decoration(t);
  std::vector<int> out;
  for (int q : deco.below) {
    out.push_back(strand_of(q));
    out.push_back(strand_of_prime(q));
  }
  return out;
}

std::vector<TwistSpec> regenerated_parasitic_block(const LineArrangement& arr,
                                                   int t) {
  const auto& idx = parasitic_index_set(t);
  std::vector<TwistSpec> out;
  out.reserve(idx.size());
  const auto deco = regenerated_decoration(t);
  for (int p : idx) {
    if (arr.meet(p, t))
      throw ArrangementError("parasitic table lists intersecting lines");
    TwistSpec s = twist(doubled_block(p), doubled_block(t), 2);
    std::vector<int> flips;
    for (int q : deco)
      if (q > strand_of_prime(p) && q < strand_of(t)) flips.push_back(q);
    s = lane_flips(std::move(s), flips);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TwistSpec> build_regenerated_parasitic(const LineArrangement& arr,
                                                   int vertex) {
  std::vector<TwistSpec> out;
  for (int t : lines_with_smaller_endpoint(arr, vertex)) {
    auto block = regenerated_parasitic_block(arr, t);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace bmf
