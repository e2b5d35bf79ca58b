// Scratch: identify the local total of the 3-point monodromy.
#include <cstdio>

#include "bmf/burau.hpp"
#include "bmf/garside.hpp"
#include "bmf/transport.hpp"

using namespace bmf;

static std::vector<TwistSpec> phi3(bool swap_last_stack) {
  const Block I(1, 2), J(3, 4);
  const int K = 5, Kp = 6;
  const auto cJK = make_spec(twist(J, Block(K), 2));
  const auto cIK = make_spec(twist(I, Block(K), 2));
  std::vector<TwistSpec> phi;
  phi.push_back(twist(J, Block(K), 3));
  for (auto [x, y] : {std::pair{1, 3}, {1, 3}, {2, 3}, {2, 3},
                      {1, 4}, {1, 4}, {2, 4}, {2, 4}})
    phi.push_back(conj_by(twist(Block(x), Block(y), 1), cJK));
  phi.push_back(twist(I, Block(K), 3));
  auto last = twist(Block(K), Block(Kp), 1);
  if (swap_last_stack) {
    last = conj_by(last, cIK);
    last = conj_by(last, cJK);
  } else {
    last = conj_by(last, cJK);
    last = conj_by(last, cIK);
  }
  phi.push_back(last);
  return phi;
}

int main() {
  const auto sys = PunctureSystem::plain(6);
  for (bool swap : {false, true}) {
    const BraidWord w = compile_product(phi3(swap), sys);
    // candidate: phi = Delta^2 * (s1 s3 s5)^-1  (already refuted for one)
    BraidWord rhs(6);
    for (int a : {1, 3, 5}) rhs.push(-a);
    rhs.append(full_twist(6));
    std::printf("swap=%d identity: %s\n", swap,
                burau_equal(w, rhs, 2) ? "YES" : "no");
    // defect braid: D = phi^-1 * Delta^2, so phi * D = Delta^2
    BraidWord defect = compose(w.inverse(), full_twist(6));
    auto nf = normal_form(defect);
    std::printf("  defect: expsum=%lld dpow=%lld len=%zu factors:",
                exponent_sum(defect), nf.delta_power,
                nf.canonical_length());
    auto dw = nf_to_word(nf);
    std::printf(" word=%s\n", dw.str().c_str());
    auto p = permutation(defect);
    std::printf("  defect perm:");
    for (int i = 0; i < 6; ++i)
      std::printf(" %d", p[static_cast<std::size_t>(i)] + 1);
    std::printf("\n");
    // try candidates for defect: conjugated products of s1,s3,s5
    const auto c1 = BraidWord(6, {1, 3, 5});
    std::printf("  defect == s1s3s5: %s\n",
                nf_equal(defect, c1) ? "YES" : "no");
  }
  return 0;
}
