#include "bmf/disk.hpp"

#include <algorithm>

namespace bmf {

SingularityKind kind_for_epsilon(int eps) {
  switch (eps) {
    case 1: return SingularityKind::branch;
    case 2: return SingularityKind::node;
    case 3: return SingularityKind::cusp;
    case 4: return SingularityKind::tangency;
  }
  throw MalformedSpec("epsilon must be 1..4");
}

int epsilon_for_kind(SingularityKind k) {
  switch (k) {
    case SingularityKind::branch: return 1;
    case SingularityKind::node: return 2;
    case SingularityKind::cusp: return 3;
    case SingularityKind::tangency: return 4;
  }
  return 0;
}

PunctureSystem PunctureSystem::plain(int n) {
  PunctureSystem s;
  s.count = n;
  s.labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) s.labels.push_back(std::to_string(i));
  return s;
}

PunctureSystem PunctureSystem::doubled(int base) {
  PunctureSystem s;
  s.count = 2 * base;
  s.labels.reserve(static_cast<std::size_t>(2 * base));
  for (int i = 1; i <= base; ++i) {
    s.labels.push_back(std::to_string(i));
    s.labels.push_back(std::to_string(i) + "'");
  }
  return s;
}

Lane TwistSpec::lane_at(int puncture) const {
  Lane lane = bar ? Lane::above : Lane::below;
  if (std::find(flips.begin(), flips.end(), puncture) != flips.end())
    lane = lane == Lane::below ? Lane::above : Lane::below;
  return lane;
}

std::string TwistSpec::str(const PunctureSystem* sys) const {
  const auto name = [&](int p) {
    return sys ? sys->label(p) : std::to_string(p);
  };
  std::string s = bar ? "bZ" : "Z";
  const int e = sign * eps;
  if (e != 1) s += "^" + std::to_string(e);
  s += "_{";
  for (int p = a.lo; p <= a.hi; ++p) s += (p == a.lo ? "" : " ") + name(p);
  s += ",";
  for (int p = b.lo; p <= b.hi; ++p) s += (p == b.lo ? "" : " ") + name(p);
  s += "}";
  if (!flips.empty()) {
    s += "(";
    for (std::size_t i = 0; i < flips.size(); ++i)
      s += (i ? " " : "") + name(flips[i]);
    s += ")";
  }
  if (!conj.empty()) {
    s += "^[";
    for (std::size_t i = 0; i < conj.size(); ++i) {
      if (i) s += " ";
      s += conj[i].spec->str(sys);
      if (conj[i].power != 1) s += "^" + std::to_string(conj[i].power);
    }
    s += "]";
  }
  return s;
}

static Macro infer_macro(const Block& a, const Block& b, int eps) {
  const bool blocky = a.size() > 1 || b.size() > 1;
  if (!blocky) return Macro::none;
  if (eps == 2) return Macro::lemma_split;
  if (eps == 3) {
    if (a.size() == 2 && b.size() == 1) return Macro::cusp_block_a;
    if (a.size() == 1 && b.size() == 2) return Macro::cusp_block_b;
    throw MalformedSpec("cusp block form needs exactly one doubled side");
  }
  throw MalformedSpec("block endpoints require epsilon 2 or 3");
}

TwistSpec twist(Block a, Block b, int eps) {
  if (a.lo > b.lo) std::swap(a, b);
  if (a.hi >= b.lo) throw MalformedSpec("blocks must be disjoint");
  TwistSpec s;
  s.a = a;
  s.b = b;
  s.eps = eps;
  if (eps < 1 || eps > 4) throw MalformedSpec("epsilon must be 1..4");
  s.macro = infer_macro(a, b, eps);
  return s;
}

SpecPtr make_spec(TwistSpec s) { return std::make_shared<const TwistSpec>(std::move(s)); }

TwistSpec barred(TwistSpec s) {
  s.bar = true;
  return s;
}

TwistSpec with_sign(TwistSpec s, int sign) {
  if (sign != 1 && sign != -1) throw MalformedSpec("sign must be +-1");
  s.sign = sign;
  return s;
}

TwistSpec lane_flips(TwistSpec s, std::vector<int> punctures) {
  for (int p : punctures) {
    if (p <= s.a.hi || p >= s.b.lo)
      throw MalformedSpec("lane override must lie strictly between blocks");
    s.flips.push_back(p);
  }
  return s;
}

TwistSpec above(TwistSpec s, std::vector<int> punctures) {
  if (s.bar) throw MalformedSpec("above-override on a barred path");
  return lane_flips(std::move(s), std::move(punctures));
}

TwistSpec conj_by(TwistSpec s, SpecPtr h, int power) {
  s.conj.push_back({std::move(h), power});
  return s;
}

TwistSpec conj_by(TwistSpec s, const TwistSpec& h, int power) {
  return conj_by(std::move(s), make_spec(h), power);
}

namespace {

TwistSpec child_of(const TwistSpec& parent, Block a, Block b,
                   std::optional<int> sibling_default_lane) {
  TwistSpec c;
  c.a = a;
  c.b = b;
  c.eps = parent.eps;
  c.sign = parent.sign;
  c.bar = parent.bar;
  c.flips = parent.flips;  // all strictly between the original blocks
  c.macro = infer_macro(a, b, parent.eps);
  c.conj = parent.conj;
  c.figure_path = parent.figure_path;
  (void)sibling_default_lane;  // sibling takes the default lane: no flip entry
  return c;
}

}  // namespace

std::vector<TwistSpec> expand_macro(const TwistSpec& spec) {
  if (spec.macro == Macro::none)
    throw MalformedSpec("expand_macro on a simple twist");
  std::vector<TwistSpec> out;
  if (spec.macro == Macro::cusp_block_a || spec.macro == Macro::cusp_block_b) {
    if (spec.sign != 1) throw MalformedSpec("negative cusp macro");
    const bool left = spec.macro == Macro::cusp_block_a;
    const Block pair = left ? spec.a : spec.b;
    TwistSpec base;
    base.a = Block(spec.a.lo);
    base.b = Block(spec.b.lo);
    base.eps = 3;
    base.bar = spec.bar;
    base.flips = spec.flips;
    base.figure_path = spec.figure_path;
    TwistSpec adj = twist(Block(pair.lo), Block(pair.hi), 1);
    const SpecPtr adj_ptr = make_spec(adj);
    TwistSpec first = base, second = base, third = base;
    first.conj.insert(first.conj.begin(), {adj_ptr, 1});
    third.conj.insert(third.conj.begin(), {adj_ptr, -1});
    for (const auto& c : spec.conj) {
      first.conj.push_back(c);
      second.conj.push_back(c);
      third.conj.push_back(c);
    }
    out = {first, second, third};
    return out;
  }
  // Block full twist: split one doubled side per the block formulas.
  if (spec.eps != 2) throw MalformedSpec("block split needs epsilon 2");
  const bool positive = spec.sign > 0;
  // With the mirror convention, barred expansions use the opposite order.
  const bool direct_order = positive != spec.bar;
  if (spec.a.size() == 2) {
    // split {i,i'}: the i-child additionally spans i' at the default lane
    TwistSpec hi = child_of(spec, Block(spec.a.hi), spec.b, {});
    TwistSpec lo = child_of(spec, Block(spec.a.lo), spec.b, spec.a.hi);
    if (direct_order)
      out = {hi, lo};
    else
      out = {lo, hi};
  } else if (spec.b.size() == 2) {
    // split {j,j'}: the j'-child additionally spans j at the default lane
    TwistSpec hi = child_of(spec, spec.a, Block(spec.b.hi), spec.b.lo);
    TwistSpec lo = child_of(spec, spec.a, Block(spec.b.lo), {});
    if (direct_order)
      out = {hi, lo};
    else
      out = {lo, hi};
  } else {
    throw MalformedSpec("block split on singleton blocks");
  }
  return out;
}

std::vector<TwistSpec> expand_all(const TwistSpec& spec) {
  std::vector<TwistSpec> out;
  if (spec.macro == Macro::none) {
    out.push_back(spec);
    return out;
  }
  for (const auto& child : expand_macro(spec)) {
    auto sub = expand_all(child);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

BraidWord compile_halftwist(const TwistSpec& spec, const PunctureSystem& sys) {
  const int n = sys.count;
  if (spec.a.lo < 1 || spec.b.hi > n)
    throw MalformedSpec("spec endpoints outside the puncture system");
  if (!spec.is_simple()) {
    BraidWord w(n);
    for (const auto& child : expand_macro(spec))
      w.append(compile_halftwist(child, sys));
    return w;
  }
  const int a = spec.a.lo, b = spec.b.lo;
  BraidWord transport(n);
  for (int c = a + 1; c < b; ++c)
    transport.push(spec.lane_at(c) == Lane::below ? c : -c);
  BraidWord w = transport.inverse();
  const int e = spec.sign * spec.eps;
  for (int k = 0; k < std::abs(e); ++k) w.push(e > 0 ? a : -a);
  w.append(transport);
  if (!spec.conj.empty()) {
    BraidWord c(n);
    for (const auto& cj : spec.conj)
      c.append(compile_halftwist(*cj.spec, sys).pow(cj.power));
    w = conjugate(w, c);
  }
  return w;
}

BraidWord compile_product(const std::vector<TwistSpec>& specs,
                          const PunctureSystem& sys) {
  BraidWord w(sys.count);
  for (const auto& s : specs) w.append(compile_halftwist(s, sys));
  return w;
}

long long spec_degree(const TwistSpec& spec) {
  if (spec.macro == Macro::none) return spec.sign * spec.eps;
  long long d = 0;
  for (const auto& c : expand_macro(spec)) d += spec_degree(c);
  return d;
}

int spec_multiplicity(const TwistSpec& spec) {
  if (spec.macro == Macro::none) return 1;
  int m = 0;
  for (const auto& c : expand_macro(spec)) m += spec_multiplicity(c);
  return m;
}

}  // namespace bmf
