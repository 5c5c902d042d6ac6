#include "binform/forms.hpp"

#include <algorithm>
#include <cmath>

namespace binform {
namespace {

// Coefficient vectors are indexed by the power of Y, so convolution is the
// product of homogeneous forms.
template <typename T>
std::vector<T> multiply(const std::vector<T>& p, const std::vector<T>& q) {
  std::vector<T> out(p.size() + q.size() - 1, T(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

template <typename T>
std::vector<T> transform_coeffs(const std::vector<T>& coeffs, const T& a, const T& b,
                                const T& c, const T& d) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  // pow_u[k] = (aX + bY)^k, pow_v[k] = (cX + dY)^k
  std::vector<std::vector<T>> pow_u{{T(1)}}, pow_v{{T(1)}};
  for (int k = 1; k <= n; ++k) {
    pow_u.push_back(multiply(pow_u.back(), std::vector<T>{a, b}));
    pow_v.push_back(multiply(pow_v.back(), std::vector<T>{c, d}));
  }
  std::vector<T> out(n + 1, T(0));
  for (int k = 0; k <= n; ++k) {
    if (coeffs[k] == T(0)) continue;
    const auto term = multiply(pow_u[n - k], pow_v[k]);
    for (int j = 0; j <= n; ++j) out[j] += coeffs[k] * term[j];
  }
  return out;
}

template <typename T>
bool all_zero(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x == T(0); });
}

}  // namespace

BinaryForm BinaryForm::exact(std::vector<Rational> coeffs) {
  if (coeffs.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "a binary form needs degree >= 1");
  if (all_zero(coeffs)) throw Error(ErrorCode::InvalidArgument, "zero form");
  for (auto& c : coeffs) c.canonicalize();
  return BinaryForm(std::move(coeffs));
}

BinaryForm BinaryForm::integer(std::initializer_list<long> coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (long c : coeffs) q.emplace_back(c);
  return exact(std::move(q));
}

BinaryForm BinaryForm::complex(std::vector<Complex> coeffs) {
  if (coeffs.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "a binary form needs degree >= 1");
  if (all_zero(coeffs)) throw Error(ErrorCode::InvalidArgument, "zero form");
  for (const auto& c : coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidArgument, "non-finite coefficient");
  return BinaryForm(std::move(coeffs));
}

BinaryForm BinaryForm::real(const std::vector<double>& coeffs) {
  return complex(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

int BinaryForm::degree() const noexcept {
  return std::visit([](const auto& v) { return static_cast<int>(v.size()) - 1; }, coeffs_);
}

bool BinaryForm::has_integer_coeffs() const {
  if (!is_exact()) return false;
  const auto& q = std::get<std::vector<Rational>>(coeffs_);
  return std::all_of(q.begin(), q.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool BinaryForm::is_real() const {
  if (is_exact()) return true;
  const auto& z = std::get<std::vector<Complex>>(coeffs_);
  return std::all_of(z.begin(), z.end(), [](Complex c) { return c.imag() == 0.0; });
}

const std::vector<Rational>& BinaryForm::exact_coeffs() const {
  if (!is_exact())
    throw Error(ErrorCode::InvalidArgument, "form has floating-point coefficients");
  return std::get<std::vector<Rational>>(coeffs_);
}

std::vector<Complex> BinaryForm::complex_coeffs() const {
  if (!is_exact()) return std::get<std::vector<Complex>>(coeffs_);
  const auto& q = std::get<std::vector<Rational>>(coeffs_);
  std::vector<Complex> out;
  out.reserve(q.size());
  for (const auto& c : q) out.emplace_back(c.get_d(), 0.0);
  return out;
}

BinaryForm BinaryForm::scaled(const Rational& c) const {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "scaling by zero");
  if (!is_exact()) return scaled(Complex(c.get_d(), 0.0));
  auto q = exact_coeffs();
  for (auto& x : q) x *= c;
  return exact(std::move(q));
}

BinaryForm BinaryForm::scaled(Complex c) const {
  if (c == Complex(0.0)) throw Error(ErrorCode::InvalidArgument, "scaling by zero");
  auto z = complex_coeffs();
  for (auto& x : z) x *= c;
  return complex(std::move(z));
}

bool operator==(const BinaryForm& lhs, const BinaryForm& rhs) {
  return lhs.coeffs_ == rhs.coeffs_;
}

LinearMap::LinearMap(double a, double b, double c, double d) : entries_{a, b, c, d} {
  if (std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))
    exact_ = std::array<Rational, 4>{Rational(a), Rational(b), Rational(c), Rational(d)};
}

LinearMap LinearMap::exact(Rational a, Rational b, Rational c, Rational d) {
  LinearMap m(a.get_d(), b.get_d(), c.get_d(), d.get_d());
  m.exact_ = std::array<Rational, 4>{std::move(a), std::move(b), std::move(c), std::move(d)};
  return m;
}

LinearMap LinearMap::integer(long a, long b, long c, long d) {
  return exact(Rational(a), Rational(b), Rational(c), Rational(d));
}

const std::array<Rational, 4>& LinearMap::exact_entries() const {
  if (!exact_) throw Error(ErrorCode::InvalidArgument, "map has floating-point entries");
  return *exact_;
}

Rational LinearMap::exact_det() const {
  const auto& e = exact_entries();
  return e[0] * e[3] - e[1] * e[2];
}

bool LinearMap::in_gl2r() const {
  return exact_ ? exact_det() != 0 : det() != 0.0;
}

bool LinearMap::in_gl2z() const {
  if (!exact_) return false;
  for (const auto& e : *exact_)
    if (e.get_den() != 1) return false;
  const Rational det = exact_det();
  return det == 1 || det == -1;
}

LinearMap compose(const LinearMap& s, const LinearMap& t) {
  if (s.is_exact() && t.is_exact()) {
    const auto& p = s.exact_entries();
    const auto& q = t.exact_entries();
    return LinearMap::exact(p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
                            p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]);
  }
  return LinearMap(s.a() * t.a() + s.b() * t.c(), s.a() * t.b() + s.b() * t.d(),
                   s.c() * t.a() + s.d() * t.c(), s.c() * t.b() + s.d() * t.d());
}

Rational eval_form(const BinaryForm& form, const Rational& x, const Rational& y) {
  const auto& a = form.exact_coeffs();
  Rational acc = a[0];
  Rational ypow = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    ypow *= y;
    acc = acc * x + a[k] * ypow;
  }
  return acc;
}

Complex eval_form(const BinaryForm& form, Complex x, Complex y) {
  const auto a = form.complex_coeffs();
  Complex acc = a[0];
  Complex ypow = 1.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    ypow *= y;
    acc = acc * x + a[k] * ypow;
  }
  return acc;
}

BinaryForm transform(const BinaryForm& form, const LinearMap& map) {
  if (!map.in_gl2r()) throw Error(ErrorCode::SingularMap, "transform by a singular map");
  if (form.is_exact() && map.is_exact()) {
    const auto& e = map.exact_entries();
    return BinaryForm::exact(transform_coeffs(form.exact_coeffs(), e[0], e[1], e[2], e[3]));
  }
  return BinaryForm::complex(transform_coeffs(form.complex_coeffs(), Complex(map.a()),
                                              Complex(map.b()), Complex(map.c()),
                                              Complex(map.d())));
}

}  // namespace binform
