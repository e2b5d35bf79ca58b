#include "bmf/transport.hpp"

#include "bmf/artin.hpp"

namespace bmf {

LanePath path_of(const TwistSpec& spec) {
  if (spec.macro != Macro::none || spec.a.size() != 1 || spec.b.size() != 1)
    throw MalformedSpec("path_of needs a simple twist");
  LanePath p;
  p.endpoint_a = spec.a.lo;
  p.endpoint_b = spec.b.lo;
  for (int c = p.endpoint_a + 1; c < p.endpoint_b; ++c)
    p.lanes[c] = spec.lane_at(c);
  p.conj = spec.conj;
  p.extra_conj = BraidWord(1);
  return p;
}

TwistSpec spec_of(const LanePath& p, int eps) {
  TwistSpec s = twist(Block(p.endpoint_a), Block(p.endpoint_b), eps);
  for (const auto& [c, lane] : p.lanes)
    if (lane == Lane::above) s.flips.push_back(c);
  s.conj = p.conj;
  if (!p.extra_conj.is_identity_word())
    throw MalformedSpec("raw transport word cannot be stored in a spec");
  return s;
}

BraidWord compile_path(const LanePath& p, const PunctureSystem& sys) {
  TwistSpec s = twist(Block(p.endpoint_a), Block(p.endpoint_b), 1);
  for (const auto& [c, lane] : p.lanes)
    if (lane == Lane::above) s.flips.push_back(c);
  s.conj = p.conj;
  BraidWord w = compile_halftwist(s, sys);
  if (!p.extra_conj.is_identity_word()) w = conjugate(w, p.extra_conj);
  return w;
}

bool braid_equal_exact(const BraidWord& u, const BraidWord& v) {
  if (u.strands() <= 16 && u.size() + v.size() < 4000)
    return artin_equal(u, v);
  return normal_form(u) == normal_form(v);
}

bool paths_equivalent(const LanePath& p, const LanePath& q,
                      const PunctureSystem& sys) {
  if (p.endpoint_a != q.endpoint_a || p.endpoint_b != q.endpoint_b)
    return false;
  return braid_equal_exact(compile_path(p, sys), compile_path(q, sys));
}

std::optional<LanePath> simplify_path(const LanePath& p,
                                      const PunctureSystem& sys, int max_gap) {
  if (p.is_simple()) return p;
  const int gap = p.endpoint_b - p.endpoint_a - 1;
  if (gap > max_gap) return std::nullopt;
  const BraidWord target = compile_path(p, sys);
  LanePath cand;
  cand.endpoint_a = p.endpoint_a;
  cand.endpoint_b = p.endpoint_b;
  cand.extra_conj = BraidWord(1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gap); ++mask) {
    cand.lanes.clear();
    for (int i = 0; i < gap; ++i)
      cand.lanes[p.endpoint_a + 1 + i] =
          (mask >> i) & 1 ? Lane::above : Lane::below;
    if (braid_equal_exact(compile_path(cand, sys), target)) return cand;
  }
  return std::nullopt;
}

LanePath apply_braid_to_path(const LanePath& p, const BraidWord& w,
                             const PunctureSystem& sys) {
  if (w.strands() != sys.count)
    throw AmbientMismatch("braid does not act on this puncture system");
  const auto pm = permutation(w);
  const auto actual = actual_endpoints(p, sys);
  int ea = pm[static_cast<std::size_t>(actual.first - 1)] + 1;
  int eb = pm[static_cast<std::size_t>(actual.second - 1)] + 1;
  if (ea > eb) std::swap(ea, eb);
  // Try a simple representative of the image first.
  const BraidWord target = conjugate(compile_path(p, sys), w);
  const int gap = eb - ea - 1;
  if (gap <= 14) {
    LanePath probe;
    probe.endpoint_a = ea;
    probe.endpoint_b = eb;
    probe.extra_conj = BraidWord(sys.count);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gap); ++mask) {
      probe.lanes.clear();
      for (int i = 0; i < gap; ++i)
        probe.lanes[ea + 1 + i] = (mask >> i) & 1 ? Lane::above : Lane::below;
      if (braid_equal_exact(compile_path(probe, sys), target)) return probe;
    }
  }
  // Symbolic image: the original base arc conjugated by the transport word.
  LanePath result = p;
  result.extra_conj = p.extra_conj.is_identity_word()
                          ? w
                          : compose(p.extra_conj, w);
  return result;
}

std::pair<int, int> actual_endpoints(const LanePath& p,
                                     const PunctureSystem& sys) {
  if (p.is_simple()) return {p.endpoint_a, p.endpoint_b};
  const auto pm = permutation(compile_path(p, sys));
  int a = -1, b = -1;
  for (int i = 0; i < sys.count; ++i) {
    if (pm[static_cast<std::size_t>(i)] != i) {
      if (a < 0)
        a = i + 1;
      else
        b = i + 1;
    }
  }
  if (b < 0) throw MalformedSpec("path does not induce a transposition");
  return {a, b};
}

}  // namespace bmf
