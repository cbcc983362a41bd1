// Small tour: degenerate Stirling numbers, a fully degenerate Bell
// polynomial, and one identity run through the verifier.

#include <iostream>

#include "lumbral.hpp"

int main() {
  using namespace lumbral;
  const Lambda half(Rational(1, 2));

  const Triangle s2 = degenerate_stirling2(4, half);
  for (std::size_t n = 0; n <= s2.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) std::cout << s2(n, k) << (k == n ? "\n" : "  ");
  }

  std::cout << "phi_3 at lambda = 1/2: " << fully_degenerate_bell(3, half) << '\n';
  std::cout << "d_2 with m = 2:        " << fully_degenerate_dowling(2, 2, half) << '\n';

  // The expansion coefficients of beta_3 in the phi basis, straight from the engine.
  const auto c = expand_in_basis(degenerate_bernoulli(3, half), bell_pair(half, 3));
  std::cout << "beta_3 in phi basis:  ";
  for (const auto& v : c) std::cout << v << ' ';
  std::cout << '\n';

  const auto report = verify(IdentityId::kThm11, 5, default_lambda_samples(21), {1, 2}, {});
  std::cout << to_string(report.identity) << ": " << (report.passed() ? "pass" : "FAIL")
            << ", certified = " << std::boolalpha << report.certified_polynomial_in_lambda << '\n';
  return report.passed() ? 0 : 1;
}
