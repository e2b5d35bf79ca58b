// Scratch: local-model identity for the 3-point monodromies.
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/transport.hpp"

using namespace bmf;

int main() {
  // Local strands 1..6 = i,i',j,j',k,k'
  const auto sys = PunctureSystem::plain(6);
  const Block I(1, 2), J(3, 4);
  const int K = 5, Kp = 6;

  const auto cJK = make_spec(twist(J, Block(K), 2));
  const auto cIK = make_spec(twist(I, Block(K), 2));

  std::vector<TwistSpec> phi;
  phi.push_back(twist(J, Block(K), 3));
  for (auto [x, y] : {std::pair{1, 3}, {1, 3}, {2, 3}, {2, 3},
                      {1, 4}, {1, 4}, {2, 4}, {2, 4}}) {
    phi.push_back(conj_by(twist(Block(x), Block(y), 1), cJK));
  }
  phi.push_back(twist(I, Block(K), 3));
  phi.push_back(conj_by(conj_by(twist(Block(K), Block(Kp), 1), cJK), cIK));

  const BraidWord w = compile_product(phi, sys);
  std::printf("deg phi_local = %lld (expect 27)\n", exponent_sum(w));
  auto p = permutation(w);
  std::printf("perm:");
  for (int i = 0; i < 6; ++i) std::printf(" %d", p[static_cast<std::size_t>(i)] + 1);
  std::printf("  (expect 2 1 4 3 6 5)\n");

  BraidWord rhs(6);
  for (int a : {1, 3, 5}) rhs.push(-a);
  rhs.append(full_twist(6));
  std::printf("local identity (burau): %s\n",
              burau_equal(w, rhs, 3) ? "YES" : "no");
  std::printf("local identity (garside): %s\n",
              nf_equal(w, rhs) ? "YES" : "no");
  return 0;
}
