#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <optional>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "binform/error.hpp"

namespace binform {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// A binary form F(X,Y) = a_0 X^n + a_1 X^{n-1} Y + ... + a_n Y^n.
///
/// Coefficients are held either as exact rationals or as complex doubles.
/// Exact forms support the exact discriminant and lattice counting; complex
/// forms only the floating-point paths. Values are immutable after
/// construction.
class BinaryForm {
 public:
  /// Throws InvalidArgument for fewer than two coefficients or all zeros.
  static BinaryForm exact(std::vector<Rational> coeffs);
  static BinaryForm integer(std::initializer_list<long> coeffs);
  static BinaryForm complex(std::vector<Complex> coeffs);
  static BinaryForm real(const std::vector<double>& coeffs);

  int degree() const noexcept;
  bool is_exact() const noexcept { return std::holds_alternative<std::vector<Rational>>(coeffs_); }
  bool has_integer_coeffs() const;
  /// True when every coefficient is real (always true for exact forms).
  bool is_real() const;

  /// Throws InvalidArgument on a complex form.
  const std::vector<Rational>& exact_coeffs() const;
  /// Available for both representations.
  std::vector<Complex> complex_coeffs() const;

  BinaryForm scaled(const Rational& c) const;
  BinaryForm scaled(Complex c) const;

  friend bool operator==(const BinaryForm& lhs, const BinaryForm& rhs);

 private:
  using Storage = std::variant<std::vector<Rational>, std::vector<Complex>>;
  explicit BinaryForm(Storage coeffs) : coeffs_(std::move(coeffs)) {}
  Storage coeffs_;
};

/// A 2x2 matrix T = [[a, b], [c, d]] acting on forms by
/// F_T(X,Y) = F(aX + bY, cX + dY). Finite double entries are kept exactly
/// as the binary fractions they denote, so such a map is always exact.
class LinearMap {
 public:
  LinearMap(double a, double b, double c, double d);
  static LinearMap exact(Rational a, Rational b, Rational c, Rational d);
  static LinearMap integer(long a, long b, long c, long d);
  static LinearMap identity() { return integer(1, 0, 0, 1); }

  double a() const noexcept { return entries_[0]; }
  double b() const noexcept { return entries_[1]; }
  double c() const noexcept { return entries_[2]; }
  double d() const noexcept { return entries_[3]; }
  double det() const noexcept { return a() * d() - b() * c(); }

  bool is_exact() const noexcept { return exact_.has_value(); }
  /// Throws InvalidArgument when the map carries no exact entries.
  const std::array<Rational, 4>& exact_entries() const;
  Rational exact_det() const;

  /// Nonzero determinant.
  bool in_gl2r() const;
  /// Integer entries with determinant +-1.
  bool in_gl2z() const;

 private:
  std::array<double, 4> entries_;
  std::optional<std::array<Rational, 4>> exact_;
};

/// The map R with transform(transform(F, s), t) == transform(F, R); as
/// matrices R = s * t.
LinearMap compose(const LinearMap& s, const LinearMap& t);

/// Homogeneous Horner evaluation. The exact overload requires an exact form.
Rational eval_form(const BinaryForm& form, const Rational& x, const Rational& y);
Complex eval_form(const BinaryForm& form, Complex x, Complex y);

/// F_T(X,Y) = F(aX+bY, cX+dY). Exact when both form and map are exact.
/// Throws SingularMap when det T = 0.
BinaryForm transform(const BinaryForm& form, const LinearMap& map);

}  // namespace binform
