// Scratch: targeted leave-one-out in a failing pair model for one vertex:
// prints the needed element vs current for factors supported there.
#include <cstdio>

#include "bmf/garside.hpp"
#include "bmf/monodromy.hpp"

using namespace bmf;

int main(int argc, char** argv) {
  const int vertex = argc > 1 ? std::atoi(argv[1]) : 4;
  const Frame f = Frame::local(six_point_lines(vertex).sorted());
  const auto sys = f.system();
  const auto mono = vertex_monodromy(vertex, f);
  BraidWord rhs(12);
  for (int j = 0; j < 6; ++j) rhs.push(-(2 * j + 1));
  rhs.append(full_twist(12));

  std::vector<BraidWord> words;
  for (const auto& fac : mono) words.push_back(compile_halftwist(fac.spec, sys));
  for (std::size_t i = 0; i < words.size(); ++i) {
    BraidWord pre(12), post(12);
    for (std::size_t j = 0; j < i; ++j) pre.append(words[j]);
    for (std::size_t j = i + 1; j < words.size(); ++j) post.append(words[j]);
    BraidWord needed = compose(std::vector{pre.inverse(), rhs, post.inverse()});
    BraidWord diff = compose(words[i].inverse(), needed);
    const auto nf = normal_form(diff);
    if (nf.delta_power == 0 && nf.canonical_factors.empty()) continue;
    std::printf("[%2zu] %-12s dist=%zu   cur=%s\n", i, mono[i].origin.c_str(),
                nf.canonical_length(), mono[i].spec.str(&sys).c_str());
    if (nf.canonical_length() <= 4)
      std::printf("     needed nf word: %s\n",
                  nf_to_word(normal_form(needed)).str().c_str());
  }
  return 0;
}
