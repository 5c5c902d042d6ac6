#include "support.hpp"

#include <algorithm>
#include <cmath>

#include "binform/discriminant.hpp"

namespace binform::testing {

long brute_count(const BinaryForm& form, long h, long halfwidth) {
  long count = 0;
  for (long x = -halfwidth; x <= halfwidth; ++x)
    for (long y = -halfwidth; y <= halfwidth; ++y)
      if (abs(eval_form(form, Rational(x), Rational(y))) <= h) ++count;
  return count;
}

BinaryForm random_integer_form(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  while (true) {
    std::vector<Rational> a;
    for (int j = 0; j <= degree; ++j) a.emplace_back(coeff(rng));
    if (a[0] == 0 && a[1] == 0) continue;
    if (std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; })) continue;
    BinaryForm f = BinaryForm::exact(a);
    if (discriminant_exact(f) != 0) return f;
  }
}

LinearMap random_map(std::mt19937_64& rng, double det_lo, double det_hi) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::uniform_real_distribution<double> log_det(std::log(det_lo), std::log(det_hi));
  while (true) {
    double a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    const double det = a * d - b * c;
    if (std::abs(det) < 0.05) continue;
    // Rescale the first row to hit a target |det| drawn log-uniformly.
    const double target = std::exp(log_det(rng));
    const double s = target / std::abs(det);
    a *= s;
    b *= s;
    return LinearMap(a, b, c, d);
  }
}

LinearMap random_integer_map(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  while (true) {
    const long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c != 0) return LinearMap::integer(a, b, c, d);
  }
}

}  // namespace binform::testing
