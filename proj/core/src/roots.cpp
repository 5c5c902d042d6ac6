#include "binform/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace binform {
namespace {

using LComplex = std::complex<long double>;

constexpr double kClusterSeparation = 1e-5;

// Simultaneous (Aberth-Ehrlich) iteration on the monic polynomial
// z^m + b[1] z^{m-1} + ... + b[m]. Every root keeps moving until one sweep
// has all steps below the tolerance; the caller validates the result by
// reconstruction.
std::vector<LComplex> aberth(const std::vector<LComplex>& b, double tol) {
  const std::size_t m = b.size() - 1;
  std::vector<LComplex> z(m);
  if (m == 0) return z;

  const long double radius = std::pow(std::abs(b[m]), 1.0L / static_cast<long double>(m));
  const long double r0 = radius > 0 ? radius : 1.0L;
  for (std::size_t k = 0; k < m; ++k) {
    const long double phi = 2.0L * std::numbers::pi_v<long double> * k / m + 0.4L;
    z[k] = std::polar(r0, phi);
  }

  for (int iter = 0; iter < kRootIterationBudget; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < m; ++k) {
      LComplex p = 1.0L, dp = 0.0L;
      for (std::size_t j = 1; j <= m; ++j) {
        dp = dp * z[k] + p;
        p = p * z[k] + b[j];
      }
      if (p == LComplex(0.0L)) continue;
      LComplex s = 0.0L;
      for (std::size_t j = 0; j < m; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      const LComplex w = p / dp;
      LComplex step = w / (1.0L - w * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = w;
      z[k] -= step;
      const long double scale = std::max(std::abs(z[k]), 1e-300L);
      if (std::abs(step) > tol * scale) all_done = false;
    }
    if (all_done) break;
  }
  return z;
}

ProjectiveRoot normalized(LComplex alpha, LComplex beta) {
  const LComplex lead = std::abs(alpha) >= std::abs(beta) ? alpha : beta;
  alpha /= lead;
  beta /= lead;
  // Make the leading component exactly one after rounding.
  if (std::abs(alpha) >= std::abs(beta)) alpha = 1.0L;
  else beta = 1.0L;
  return {Complex(static_cast<double>(alpha.real()), static_cast<double>(alpha.imag())),
          Complex(static_cast<double>(beta.real()), static_cast<double>(beta.imag()))};
}

std::vector<LComplex> product_coeffs(const std::vector<ProjectiveRoot>& pairs) {
  std::vector<LComplex> out{1.0L};
  for (const auto& r : pairs) {
    std::vector<LComplex> next(out.size() + 1, 0.0L);
    const LComplex a(r.alpha.real(), r.alpha.imag());
    const LComplex b(r.beta.real(), r.beta.imag());
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i] += out[i] * a;
      next[i + 1] -= out[i] * b;
    }
    out = std::move(next);
  }
  return out;
}

std::vector<LComplex> long_coeffs(const BinaryForm& form) {
  std::vector<LComplex> out;
  if (form.is_exact()) {
    for (const auto& q : form.exact_coeffs()) {
      // Long-double quotient keeps more of the rational than get_d().
      const long double num = mpz_get_d(q.get_num_mpz_t());
      const long double den = mpz_get_d(q.get_den_mpz_t());
      out.emplace_back(num / den, 0.0L);
    }
  } else {
    for (const auto& c : form.complex_coeffs()) out.emplace_back(c.real(), c.imag());
  }
  return out;
}

// Newton polish of simple roots in 192-bit arithmetic against the input
// coefficients, which are exact in both representations (rationals, or
// doubles read as binary fractions). Clustered roots come out of the long
// double iteration with only a few correct digits; the polish recovers full
// double precision. A polished root that moves further than half the
// distance to its nearest neighbour is discarded in favour of the original.
struct BigComplex {
  mpf_class re, im;
};

constexpr mp_bitcnt_t kPolishBits = 192;

BigComplex big(const Rational& q) { return {mpf_class(q, kPolishBits), mpf_class(0, kPolishBits)}; }
BigComplex big(Complex c) { return {mpf_class(c.real(), kPolishBits), mpf_class(c.imag(), kPolishBits)}; }

BigComplex divide(const BigComplex& x, const BigComplex& y) {
  const mpf_class den = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den};
}

// Monic coefficients of the middle factor in the chosen chart.
template <typename T>
std::vector<BigComplex> monic_big(const std::vector<T>& coeffs, int lead_zeros, int trail_zeros,
                                  bool x_chart) {
  std::vector<BigComplex> mid;
  for (std::size_t j = lead_zeros; j + trail_zeros < coeffs.size(); ++j) mid.push_back(big(coeffs[j]));
  if (!x_chart) std::reverse(mid.begin(), mid.end());
  const BigComplex lead = mid.front();
  for (auto& c : mid) c = divide(c, lead);
  return mid;
}

void polish(std::vector<LComplex>& z, const std::vector<BigComplex>& b) {
  const std::size_t m = z.size();
  for (std::size_t k = 0; k < m; ++k) {
    long double gap = std::numeric_limits<long double>::infinity();
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) gap = std::min(gap, std::abs(z[k] - z[j]));
    BigComplex w{mpf_class(static_cast<double>(z[k].real()), kPolishBits),
                 mpf_class(static_cast<double>(z[k].imag()), kPolishBits)};
    // Restore the long-double digits lost in the double conversion.
    w.re += mpf_class(static_cast<double>(z[k].real() - static_cast<double>(z[k].real())), kPolishBits);
    w.im += mpf_class(static_cast<double>(z[k].imag() - static_cast<double>(z[k].imag())), kPolishBits);
    for (int iter = 0; iter < 8; ++iter) {
      BigComplex p{mpf_class(1, kPolishBits), mpf_class(0, kPolishBits)};
      BigComplex dp{mpf_class(0, kPolishBits), mpf_class(0, kPolishBits)};
      for (std::size_t j = 1; j <= m; ++j) {
        mpf_class re = dp.re * w.re - dp.im * w.im + p.re;
        mpf_class im = dp.re * w.im + dp.im * w.re + p.im;
        dp = {re, im};
        re = p.re * w.re - p.im * w.im + b[j].re;
        im = p.re * w.im + p.im * w.re + b[j].im;
        p = {re, im};
      }
      const mpf_class den = dp.re * dp.re + dp.im * dp.im;
      if (den == 0) break;
      w.re -= (p.re * dp.re + p.im * dp.im) / den;
      w.im -= (p.im * dp.re - p.re * dp.im) / den;
    }
    const LComplex polished(static_cast<long double>(w.re.get_d()) +
                                static_cast<long double>(mpf_class(w.re - w.re.get_d()).get_d()),
                            static_cast<long double>(w.im.get_d()) +
                                static_cast<long double>(mpf_class(w.im - w.im.get_d()).get_d()));
    if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
        std::abs(polished - z[k]) < 0.5L * gap)
      z[k] = polished;
  }
}

}  // namespace

bool ProjectiveRoot::is_real(double tol) const {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  return std::abs((alpha * std::conj(beta)).imag()) <= tol * norm2;
}

double ProjectiveRoot::angle() const {
  const Complex lead = std::abs(alpha) >= std::abs(beta) ? alpha : beta;
  const Complex a = alpha * std::conj(lead);
  const Complex b = beta * std::conj(lead);
  double theta = std::atan2(a.real(), b.real());
  if (theta < 0) theta += std::numbers::pi;
  if (theta >= std::numbers::pi) theta -= std::numbers::pi;
  return theta;
}

std::size_t RootSet::real_count(double tol) const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [tol](const auto& r) { return r.is_real(tol); }));
}

RootSet roots(const BinaryForm& form, double tol) {
  const auto a = long_coeffs(form);
  const int n = form.degree();

  int lead_zeros = 0;
  while (a[lead_zeros] == LComplex(0.0L)) ++lead_zeros;
  int trail_zeros = 0;
  while (a[n - trail_zeros] == LComplex(0.0L)) ++trail_zeros;

  RootSet out;
  for (int i = 0; i < lead_zeros; ++i) out.pairs.push_back({Complex(0.0), Complex(1.0)});
  for (int i = 0; i < trail_zeros; ++i) out.pairs.push_back({Complex(1.0), Complex(0.0)});

  // Middle factor: nonzero at both ends. Solve in whichever affine chart has
  // the larger leading coefficient.
  const std::vector<LComplex> mid(a.begin() + lead_zeros, a.end() - trail_zeros);
  const std::size_t m = mid.size() - 1;
  if (m > 0) {
    const bool x_chart = std::abs(mid.front()) >= std::abs(mid.back());
    std::vector<LComplex> monic(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
      monic[j] = x_chart ? mid[j] / mid.front() : mid[m - j] / mid.back();
    auto found = aberth(monic, tol);
    polish(found, form.is_exact()
                      ? monic_big(form.exact_coeffs(), lead_zeros, trail_zeros, x_chart)
                      : monic_big(form.complex_coeffs(), lead_zeros, trail_zeros, x_chart));
    for (const auto& z : found) {
      // x-chart root r: factor X - rY. y-chart root s: factor sX - Y.
      out.pairs.push_back(x_chart ? normalized(1.0L, z) : normalized(z, 1.0L));
    }
  }

  const auto prod = product_coeffs(out.pairs);
  std::size_t pivot = 0;
  for (std::size_t j = 1; j < prod.size(); ++j)
    if (std::abs(prod[j]) > std::abs(prod[pivot])) pivot = j;
  const LComplex scale = a[pivot] / prod[pivot];
  out.scale = Complex(static_cast<double>(scale.real()), static_cast<double>(scale.imag()));

  long double max_coeff = 0.0L, max_err = 0.0L;
  for (std::size_t j = 0; j < a.size(); ++j) {
    max_coeff = std::max(max_coeff, std::abs(a[j]));
    max_err = std::max(max_err, std::abs(a[j] - scale * prod[j]));
  }
  if (!(max_err <= std::max<long double>(tol, 64 * 1.1e-16L) * max_coeff)) {
    // A multiple root caps the attainable accuracy near sqrt(eps).
    if (min_root_separation(out) < kClusterSeparation)
      throw Error(ErrorCode::DegenerateRoot, "repeated or nearly repeated root; the factorization is ill-conditioned");
    throw Error(ErrorCode::NoConvergence,
                "root refinement did not reach the requested reconstruction tolerance");
  }
  return out;
}

BinaryForm reconstruct(const RootSet& roots) {
  const auto prod = product_coeffs(roots.pairs);
  const LComplex scale(roots.scale.real(), roots.scale.imag());
  std::vector<Complex> coeffs;
  coeffs.reserve(prod.size());
  for (const auto& c : prod) {
    const LComplex v = scale * c;
    coeffs.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return BinaryForm::complex(std::move(coeffs));
}

double relative_coeff_error(const BinaryForm& reference, const BinaryForm& other) {
  const auto a = reference.complex_coeffs();
  const auto b = other.complex_coeffs();
  if (a.size() != b.size())
    throw Error(ErrorCode::InvalidArgument, "forms of different degree");
  double max_coeff = 0.0, max_err = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    max_coeff = std::max(max_coeff, std::abs(a[j]));
    max_err = std::max(max_err, std::abs(a[j] - b[j]));
  }
  return max_err / max_coeff;
}

Complex discriminant_float(const RootSet& roots) {
  const std::size_t n = roots.pairs.size();
  LComplex acc(1.0L);
  for (std::size_t i = 0; i < n; ++i) {
    const LComplex ai(roots.pairs[i].alpha.real(), roots.pairs[i].alpha.imag());
    const LComplex bi(roots.pairs[i].beta.real(), roots.pairs[i].beta.imag());
    for (std::size_t j = i + 1; j < n; ++j) {
      const LComplex aj(roots.pairs[j].alpha.real(), roots.pairs[j].alpha.imag());
      const LComplex bj(roots.pairs[j].beta.real(), roots.pairs[j].beta.imag());
      const LComplex bracket = ai * bj - aj * bi;
      acc *= bracket * bracket;
    }
  }
  if (n >= 2) {
    const LComplex scale(roots.scale.real(), roots.scale.imag());
    for (std::size_t k = 0; k < 2 * (n - 1); ++k) acc *= scale;
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double min_root_separation(const RootSet& roots) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < roots.pairs.size(); ++j) {
      const auto& p = roots.pairs[i];
      const auto& q = roots.pairs[j];
      best = std::min(best, std::abs(p.alpha * q.beta - q.alpha * p.beta));
    }
  return best;
}

}  // namespace binform
