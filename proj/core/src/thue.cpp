#include "binform/thue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "binform/area.hpp"
#include "binform/parallel.hpp"
#include "binform/real_roots.hpp"
#include "binform/roots.hpp"

namespace binform {
namespace {

constexpr int kCircleSamples = 4096;
constexpr double kDiskSafety = 0.99;

std::vector<mpz_class> integer_coeffs(const BinaryForm& form) {
  if (!form.has_integer_coeffs())
    throw Error(ErrorCode::InvalidArgument, "lattice counting needs integer coefficients");
  std::vector<mpz_class> out;
  for (const auto& q : form.exact_coeffs()) out.push_back(q.get_num());
  return out;
}

mpz_class eval_int(const std::vector<mpz_class>& a, long x, long y) {
  mpz_class acc = a[0], ypow = 1;
  const mpz_class mx(x), my(y);
  for (std::size_t k = 1; k < a.size(); ++k) {
    ypow *= my;
    acc = acc * mx + a[k] * ypow;
  }
  return acc;
}

bool within(const mpz_class& v, long h) { return abs(v) <= h; }

// |F(cos t, sin t)| evaluated accurately: rational arithmetic at the double
// point (cos t, sin t) for exact forms, long-double Horner otherwise.
class CircleValue {
 public:
  explicit CircleValue(const BinaryForm& form) : form_(form) {
    for (const auto& c : form.complex_coeffs()) coeffs_.emplace_back(c.real(), c.imag());
  }

  double operator()(double theta) const {
    const double c = std::cos(theta), s = std::sin(theta);
    const double n = form_.degree();
    if (form_.is_exact()) {
      const Rational v = eval_form(form_, Rational(c), Rational(s));
      const double norm = std::pow(c * c + s * s, 0.5 * n);
      return std::abs(v.get_d()) / norm;
    }
    std::complex<long double> acc = coeffs_[0], ypow = 1.0L;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      ypow *= static_cast<long double>(s);
      acc = acc * static_cast<long double>(c) + coeffs_[k] * ypow;
    }
    return static_cast<double>(std::abs(acc));
  }

  // Plain double Horner for the dense sampling pass.
  double quick(double theta) const {
    const double c = std::cos(theta), s = std::sin(theta);
    std::complex<double> acc(static_cast<double>(coeffs_[0].real()),
                             static_cast<double>(coeffs_[0].imag()));
    double ypow = 1.0;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      ypow *= s;
      acc = acc * c + std::complex<double>(static_cast<double>(coeffs_[k].real()),
                                           static_cast<double>(coeffs_[k].imag())) * ypow;
    }
    return std::abs(acc);
  }

 private:
  const BinaryForm& form_;
  std::vector<std::complex<long double>> coeffs_;
};

// G = -Y F_X + X F_Y, whose real roots are the critical directions of F on
// the circle. Empty when G vanishes, i.e. F is constant on the circle.
std::optional<BinaryForm> angular_derivative(const BinaryForm& form) {
  const int n = form.degree();
  if (form.is_exact()) {
    const auto& a = form.exact_coeffs();
    std::vector<Rational> g(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
      if (k + 1 <= n) g[k] += (k + 1) * a[k + 1];
      if (k - 1 >= 0) g[k] -= (n - k + 1) * a[k - 1];
    }
    if (std::all_of(g.begin(), g.end(), [](const Rational& v) { return v == 0; }))
      return std::nullopt;
    return BinaryForm::exact(std::move(g));
  }
  const auto a = form.complex_coeffs();
  std::vector<Complex> g(n + 1, Complex(0.0));
  for (int k = 0; k <= n; ++k) {
    if (k + 1 <= n) g[k] += static_cast<double>(k + 1) * a[k + 1];
    if (k - 1 >= 0) g[k] -= static_cast<double>(n - k + 1) * a[k - 1];
  }
  if (std::all_of(g.begin(), g.end(), [](Complex v) { return v == Complex(0.0); }))
    return std::nullopt;
  return BinaryForm::complex(std::move(g));
}

// Integers y in [-halfwidth, halfwidth] with |F(x, y)| <= h for one column.
long count_column(const std::vector<mpz_class>& a, long x, long h, long halfwidth) {
  const std::size_t n = a.size() - 1;
  // g(y) = sum_j a_j x^{n-j} y^j, ascending in y.
  std::vector<mpz_class> g(n + 1);
  mpz_class xpow = 1;
  for (std::size_t j = n + 1; j-- > 0;) {
    g[j] = a[j] * xpow;
    xpow *= x;
  }
  auto exact_in = [&](long y) {
    mpz_class acc = 0;
    for (std::size_t j = n + 1; j-- > 0;) acc = acc * y + g[j];
    return within(acc, h);
  };

  std::vector<long double> base, minus, plus, deriv;
  for (const auto& c : g) base.push_back(static_cast<long double>(c.get_d()));
  minus = base;
  plus = base;
  minus[0] -= h;
  plus[0] += h;
  for (std::size_t j = 1; j <= n; ++j) deriv.push_back(base[j] * static_cast<long double>(j));

  const long double lo = -halfwidth - 3, hi = halfwidth + 3;
  std::vector<long double> breaks{lo, hi};
  for (const auto* poly : {&minus, &plus, &deriv})
    for (long double r : real_roots(*poly))
      if (r > lo && r < hi) breaks.push_back(r);
  std::sort(breaks.begin(), breaks.end());

  // Integers within one unit of a break are decided individually.
  std::set<long> special;
  for (long double b : breaks) {
    const long f = static_cast<long>(std::floor(b));
    for (long y = f - 1; y <= f + 2; ++y)
      if (y >= -halfwidth && y <= halfwidth) special.insert(y);
  }
  long count = 0;
  for (long y : special)
    if (exact_in(y)) ++count;

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    long first = static_cast<long>(std::floor(breaks[i])) + 3;
    long last = static_cast<long>(std::floor(breaks[i + 1])) - 2;
    first = std::max(first, -halfwidth);
    last = std::min(last, halfwidth);
    if (first > last) continue;
    // Membership is constant between breaks; confirm at both ends.
    const bool in_first = exact_in(first);
    const bool in_last = exact_in(last);
    if (in_first == in_last) {
      if (in_first) count += last - first + 1;
    } else {
      for (long y = first; y <= last; ++y)
        if (exact_in(y)) ++count;
    }
  }
  return count;
}

}  // namespace

std::string_view to_string(CountStrategy strategy) noexcept {
  return strategy == CountStrategy::DefiniteExact ? "definite-exact" : "box-restricted";
}

double min_on_circle(const BinaryForm& form) {
  const CircleValue value(form);
  double best = std::numeric_limits<double>::infinity();

  const auto g = angular_derivative(form);
  if (!g) return value(0.0);
  for (const auto& r : roots(*g).pairs) best = std::min(best, value(r.angle()));

  const double step = std::numbers::pi / kCircleSamples;
  int best_i = 0;
  double best_sample = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCircleSamples; ++i) {
    const double v = value.quick(i * step);
    if (v < best_sample) best_sample = v, best_i = i;
  }
  // Golden-section search around the best sample.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (best_i - 1) * step, hi = (best_i + 1) * step;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = value(x1), f2 = value(x2);
  for (int iter = 0; iter < 60; ++iter) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - inv_phi * (hi - lo), f1 = value(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + inv_phi * (hi - lo), f2 = value(x2);
    }
  }
  best = std::min({best, f1, f2, value(best_i * step)});
  return best;
}

bool is_definite(const BinaryForm& form) {
  if (form.degree() % 2 == 1) return false;
  return roots(form).real_count(kRealRootTol) == 0;
}

LatticeCount count_definite(const BinaryForm& form, long h) {
  if (h < 0) throw Error(ErrorCode::InvalidArgument, "h must be non-negative");
  const auto a = integer_coeffs(form);
  if (!is_definite(form))
    throw Error(ErrorCode::NotDefinite, "form has a real projective root; use a box-restricted count");

  LatticeCount out;
  out.h = h;
  out.strategy = CountStrategy::DefiniteExact;
  const int n = form.degree();
  const double m = min_on_circle(form);
  out.radius = h == 0 ? 0.0 : std::pow(static_cast<double>(h) / (kDiskSafety * m), 1.0 / n);

  const long xmax = static_cast<long>(std::floor(out.radius));
  for (long x = -xmax; x <= xmax; ++x) {
    const double rest = out.radius * out.radius - static_cast<double>(x) * x;
    const long ymax = rest > 0 ? static_cast<long>(std::floor(std::sqrt(rest))) : 0;
    for (long y = -ymax; y <= ymax; ++y)
      if (within(eval_int(a, x, y), h)) out.points.push_back({x, y});
  }
  out.count = static_cast<long>(out.points.size());
  return out;
}

LatticeCount count_box(const BinaryForm& form, long h, long halfwidth) {
  if (h < 0) throw Error(ErrorCode::InvalidArgument, "h must be non-negative");
  if (halfwidth < 0) throw Error(ErrorCode::InvalidArgument, "box half-width must be non-negative");
  const auto a = integer_coeffs(form);

  const std::size_t columns = static_cast<std::size_t>(2 * halfwidth + 1);
  std::vector<long> per_column(columns, 0);
  parallel_for(columns, [&](std::size_t i) {
    per_column[i] = count_column(a, static_cast<long>(i) - halfwidth, h, halfwidth);
  });

  LatticeCount out;
  out.h = h;
  out.strategy = CountStrategy::BoxRestricted;
  out.box = halfwidth;
  for (long c : per_column) out.count += c;
  return out;
}

MahlerTable mahler_table(const BinaryForm& form, std::span<const long> h_values,
                         CountStrategy strategy, std::optional<long> halfwidth) {
  for (long h : h_values)
    if (h < 1) throw Error(ErrorCode::InvalidArgument, "Mahler table needs every h >= 1");
  if (strategy == CountStrategy::BoxRestricted && !halfwidth)
    throw Error(ErrorCode::InvalidArgument, "box-restricted table needs a half-width");

  MahlerTable out;
  out.strategy = strategy;
  out.area = area(form).area;
  if (strategy == CountStrategy::BoxRestricted) {
    out.box = halfwidth;
    out.caveat = "counts restricted to the box [-" + std::to_string(*halfwidth) + ", " +
                 std::to_string(*halfwidth) + "]^2; the area term is the full A_F";
  }
  const double n = form.degree();
  for (long h : h_values) {
    const LatticeCount c = strategy == CountStrategy::DefiniteExact
                               ? count_definite(form, h)
                               : count_box(form, h, *halfwidth);
    MahlerDiagnostic d;
    d.h = h;
    d.n_count = c.count;
    d.area_term = out.area * std::pow(static_cast<double>(h), 2.0 / n);
    d.scaled_error = std::abs(static_cast<double>(c.count) - d.area_term) /
                     std::pow(static_cast<double>(h), 1.0 / (n - 1.0));
    out.empirical_c = std::max(out.empirical_c, d.scaled_error);
    out.rows.push_back(d);
  }
  return out;
}

}  // namespace binform
