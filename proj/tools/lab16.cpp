// Scratch: leave-one-out solver for a 6-point local identity: for each
// factor, the element it would need to be if all others were right, and
// its Garside distance from the current transcription.
#include <cstdio>

#include "bmf/garside.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main(int argc, char** argv) {
  const int vertex = argc > 1 ? std::atoi(argv[1]) : 2;
  const Frame f = Frame::local(six_point_lines(vertex).sorted());
  const auto sys = f.system();
  const auto mono = vertex_monodromy(vertex, f);
  BraidWord rhs(12);
  for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
  rhs.append(full_twist(12));

  std::vector<BraidWord> words;
  for (const auto& fac : mono) words.push_back(compile_halftwist(fac.spec, sys));

  BraidWord whole(12);
  for (const auto& w : words) whole.append(w);
  std::printf("vertex %d: identity %s\n", vertex,
              nf_equal(whole, rhs) ? "HOLDS" : "fails");

  for (std::size_t i = 0; i < words.size(); ++i) {
    BraidWord pre(12), post(12);
    for (std::size_t j = 0; j < i; ++j) pre.append(words[j]);
    for (std::size_t j = i + 1; j < words.size(); ++j) post.append(words[j]);
    // needed = pre^-1 rhs post^-1
    BraidWord needed = compose(std::vector{pre.inverse(), rhs, post.inverse()});
    BraidWord diff = compose(words[i].inverse(), needed);
    const auto nf = normal_form(diff);
    std::printf("  [%2zu] %-14s dist=%zu dpow=%lld  %s\n", i,
                mono[i].origin.c_str(), nf.canonical_length(), nf.delta_power,
                mono[i].spec.str(&sys).c_str());
  }
  return 0;
}
