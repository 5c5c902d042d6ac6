#include "binform/discriminant.hpp"

#include <utility>

namespace binform {
namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

RationalPoly derivative(const RationalPoly& p) {
  const std::size_t d = p.size() - 1;
  RationalPoly out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(p[i] * static_cast<long>(d - i));
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> sylvester_matrix(const RationalPoly& p, const RationalPoly& q) {
  const std::size_t dp = p.size() - 1;
  const std::size_t dq = q.size() - 1;
  const std::size_t size = dp + dq;
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t row = 0; row < dq; ++row)
    for (std::size_t j = 0; j <= dp; ++j) m[row][row + j] = p[j];
  for (std::size_t row = 0; row < dp; ++row)
    for (std::size_t j = 0; j <= dq; ++j) m[dq + row][row + j] = q[j];
  return m;
}

Rational resultant(const RationalPoly& p, const RationalPoly& q) {
  if (p.empty() || q.empty() || p.front() == 0 || q.front() == 0)
    throw Error(ErrorCode::InvalidArgument, "resultant needs nonzero leading coefficients");
  if (p.size() == 1 && q.size() == 1) return 1;
  return determinant(sylvester_matrix(p, q));
}

Rational univariate_discriminant(const RationalPoly& p) {
  if (p.empty() || p.front() == 0)
    throw Error(ErrorCode::InvalidArgument, "discriminant needs a nonzero leading coefficient");
  const std::size_t d = p.size() - 1;
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "discriminant of a constant");
  if (d == 1) return 1;
  Rational disc = resultant(p, derivative(p)) / p.front();
  if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

Rational discriminant_exact(const BinaryForm& form) {
  const auto& a = form.exact_coeffs();
  const int n = form.degree();
  if (n == 1) return 1;
  if (a[0] != 0) return univariate_discriminant(a);
  if (a[1] == 0) return 0;  // Y^2 divides F
  const RationalPoly tail(a.begin() + 1, a.end());
  return a[1] * a[1] * univariate_discriminant(tail);
}

}  // namespace binform
