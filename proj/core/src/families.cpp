#include "binform/families.hpp"

#include <string>

namespace binform {

BinaryForm make_pk(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "P_k needs k >= 1, got " + std::to_string(k));
  // prod_j (jX - Y)^2, coefficients indexed by the power of Y.
  std::vector<Rational> prod{Rational(1)};
  for (int j = 1; j <= k; ++j) {
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<Rational> next(prod.size() + 1, Rational(0));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i] += prod[i] * j;
        next[i + 1] -= prod[i];
      }
      prod = std::move(next);
    }
  }
  prod[0] += 1;  // + X^{2k}
  return BinaryForm::exact(std::move(prod));
}

BinaryForm make_fstar(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "F_n* needs n >= 3, got " + std::to_string(n));
  // prod_k (X sin(k pi/n) - Y cos(k pi/n)) = 2^{1-n} Im (X + iY)^n.
  std::vector<Rational> coeffs(n + 1, Rational(0));
  mpz_class binom = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) binom = binom * (n - j + 1) / j;
    if (j % 2 == 1) coeffs[j] = (j % 4 == 1 ? 1 : -1) * Rational(binom);
  }
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  for (auto& c : coeffs) {
    c /= two_pow;
    c.canonicalize();
  }
  return BinaryForm::exact(std::move(coeffs));
}

}  // namespace binform
