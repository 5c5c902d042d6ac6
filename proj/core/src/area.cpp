#include "binform/area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "binform/discriminant.hpp"
#include "binform/quadrature.hpp"

namespace binform {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMergeGap = 1e-12;
// Normalized pairs closer than this count as a repeated root on the float path.
constexpr double kFloatRepeatedRoot = 1e-7;

struct Breakpoint {
  double angle;  // in [0, pi)
  int anchor;    // index of the real root vanishing here, or -1
};

struct Factor {
  bool real;
  double radius;  // real: |(alpha, beta)|
  double angle;   // real: zero direction
  Complex alpha;
  Complex beta;
};

class Integrand {
 public:
  explicit Integrand(const RootSet& roots, double tol) : exponent_(-2.0 / roots.degree()) {
    scale_ = std::abs(roots.scale);
    for (const auto& r : roots.pairs) {
      Factor f{r.is_real(tol), 0.0, 0.0, r.alpha, r.beta};
      if (f.real) {
        const Complex lead = std::abs(r.alpha) >= std::abs(r.beta) ? r.alpha : r.beta;
        // Rotate by the common phase so both components are real.
        const double a = (r.alpha * std::conj(lead)).real() / std::abs(lead);
        const double b = (r.beta * std::conj(lead)).real() / std::abs(lead);
        f.radius = std::hypot(a, b);
        f.angle = r.angle();
      }
      factors_.push_back(f);
    }
  }

  const std::vector<Factor>& factors() const { return factors_; }

  // |F(cos t, sin t)|^{-2/n}; the anchored factors use the exact offsets.
  double operator()(double theta, int left_anchor, double from_left, int right_anchor,
                    double from_right) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    double prod = scale_;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& f = factors_[i];
      if (f.real) {
        double diff;
        if (static_cast<int>(i) == left_anchor) diff = from_left;
        else if (static_cast<int>(i) == right_anchor) diff = from_right;
        else diff = theta - f.angle;
        prod *= f.radius * std::abs(std::sin(diff));
      } else {
        prod *= std::abs(f.alpha * c - f.beta * s);
      }
    }
    return std::pow(prod, exponent_);
  }

 private:
  double exponent_;
  double scale_;
  std::vector<Factor> factors_;
};

std::vector<Breakpoint> breakpoints(const Integrand& integrand) {
  std::vector<Breakpoint> pts;
  const auto& factors = integrand.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].real) {
      pts.push_back({factors[i].angle, static_cast<int>(i)});
    } else {
      ProjectiveRoot r{factors[i].alpha, factors[i].beta};
      pts.push_back({r.angle(), -1});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const Breakpoint& x, const Breakpoint& y) {
    return x.angle < y.angle || (x.angle == y.angle && x.anchor > y.anchor);
  });

  std::vector<Breakpoint> merged;
  for (const auto& p : pts) {
    if (!merged.empty() && p.angle - merged.back().angle < kMergeGap) {
      if (p.anchor >= 0 && merged.back().anchor >= 0)
        throw Error(ErrorCode::DegenerateRoot, "repeated real root direction");
      if (p.anchor >= 0) merged.back() = p;
      continue;
    }
    merged.push_back(p);
  }
  // Wrap-around duplicate (angles near 0 and near pi are the same direction).
  if (merged.size() > 1 && merged.front().angle + kPi - merged.back().angle < kMergeGap) {
    if (merged.front().anchor >= 0 && merged.back().anchor >= 0)
      throw Error(ErrorCode::DegenerateRoot, "repeated real root direction");
    if (merged.back().anchor >= 0) merged.front() = {merged.back().angle - kPi, merged.back().anchor};
    merged.pop_back();
  }

  // Midpoints, including the wrap-around gap.
  std::vector<Breakpoint> out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    out.push_back(merged[i]);
    const double next = i + 1 < merged.size() ? merged[i + 1].angle : merged.front().angle + kPi;
    out.push_back({0.5 * (merged[i].angle + next), -1});
  }
  return out;
}

struct PanelSum {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  int panels = 0;
};

void integrate_panel(const Integrand& integrand, double a, double b, int left, int right,
                     double tol, PanelSum& acc) {
  const auto f = [&](double theta, double from_left, double from_right) {
    return integrand(theta, left, from_left, right, -from_right);
  };
  TanhSinhOptions opts;
  opts.abs_tol = tol;
  opts.max_level = 8;
  const auto r = tanh_sinh(f, a, b, opts);
  acc.evaluations += r.evaluations;
  if (acc.evaluations > kQuadratureBudget)
    throw Error(ErrorCode::QuadratureFailure,
                "area quadrature exceeded its evaluation budget of 2^20");
  if (r.converged) {
    acc.value += r.value;
    acc.error += r.error;
    ++acc.panels;
    return;
  }
  const double mid = 0.5 * (a + b);
  integrate_panel(integrand, a, mid, left, -1, 0.5 * tol, acc);
  integrate_panel(integrand, mid, b, -1, right, 0.5 * tol, acc);
}

std::vector<double> angles_from(const RootSet& roots, double tol) {
  std::vector<double> out;
  for (const auto& r : roots.pairs) {
    if (!r.is_real(tol)) continue;
    const double t = r.angle();
    out.push_back(t);
    out.push_back(t + kPi);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] - out[i - 1] < kMergeGap)
      throw Error(ErrorCode::DegenerateRoot, "repeated real root direction");
  return out;
}

double log_abs(const Rational& q) {
  long num_exp = 0, den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  return std::log(std::abs(num)) - std::log(den) +
         static_cast<double>(num_exp - den_exp) * std::numbers::ln2;
}

void check_degree(int n) {
  if (n < 3)
    throw Error(ErrorCode::DegreeTooLow,
                "degree " + std::to_string(n) + " < 3: the region |F| <= 1 has infinite area");
}

InvariantValue combine(double log_disc, int n, double area) {
  InvariantValue out;
  out.area = area;
  out.disc_magnitude = std::exp(log_disc);
  out.value = std::exp(log_disc / (n * (n - 1.0))) * area;
  return out;
}

// A floating form whose roots cannot be separated has D_F = 0 to working
// precision.
RootSet factor(const BinaryForm& form) {
  try {
    return roots(form);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateRoot)
      throw Error(ErrorCode::DiscriminantZero, "repeated root: D_F = 0 and the area is infinite");
    throw;
  }
}

}  // namespace

std::vector<double> singular_angles(const RootSet& roots, double tol) {
  return angles_from(roots, tol);
}

std::vector<double> singular_angles(const BinaryForm& form, double tol) {
  if (form.is_exact() && form.degree() >= 2 && discriminant_exact(form) == 0)
    throw Error(ErrorCode::DegenerateRoot, "form has a repeated root");
  return angles_from(roots(form), tol);
}

AreaResult area_from_roots(const RootSet& roots, double tol) {
  check_degree(roots.degree());
  if (min_root_separation(roots) < kFloatRepeatedRoot)
    throw Error(ErrorCode::DiscriminantZero, "repeated root: D_F = 0 and the area is infinite");

  const Integrand integrand(roots, kRealRootTol);
  const auto pts = breakpoints(integrand);

  AreaResult out;
  out.singular_angles = angles_from(roots, kRealRootTol);

  PanelSum acc;
  const double panel_tol = tol / static_cast<double>(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Breakpoint& lo = pts[i];
    const Breakpoint hi = i + 1 < pts.size() ? pts[i + 1] : Breakpoint{pts.front().angle + kPi, pts.front().anchor};
    integrate_panel(integrand, lo.angle, hi.angle, lo.anchor, hi.anchor, panel_tol, acc);
  }
  out.area = acc.value;
  out.abs_error_estimate = acc.error;
  out.panels = acc.panels;
  out.evaluations = acc.evaluations;
  return out;
}

AreaResult area(const BinaryForm& form, double tol) {
  check_degree(form.degree());
  if (form.is_exact() && discriminant_exact(form) == 0)
    throw Error(ErrorCode::DiscriminantZero, "D_F = 0: the region |F| <= 1 has infinite area");
  return area_from_roots(factor(form), tol);
}

InvariantValue invariant_from_roots(const RootSet& roots, double tol) {
  const auto a = area_from_roots(roots, tol);
  const double log_disc = std::log(std::abs(discriminant_float(roots)));
  return combine(log_disc, roots.degree(), a.area);
}

InvariantValue invariant(const BinaryForm& form, double tol) {
  check_degree(form.degree());
  if (!form.is_exact()) return invariant_from_roots(factor(form), tol);
  const Rational disc = discriminant_exact(form);
  if (disc == 0)
    throw Error(ErrorCode::DiscriminantZero, "D_F = 0: the region |F| <= 1 has infinite area");
  const auto a = area_from_roots(factor(form), tol);
  return combine(log_abs(disc), form.degree(), a.area);
}

double area_oracle_grid(const BinaryForm& form, double halfwidth, int cells) {
  if (!(halfwidth > 0.0) || cells < 1)
    throw Error(ErrorCode::InvalidArgument, "grid oracle needs halfwidth > 0 and cells >= 1");
  const auto z = form.complex_coeffs();
  const bool real = form.is_real();
  std::vector<double> re;
  for (const auto& c : z) re.push_back(c.real());

  const double step = 2.0 * halfwidth / cells;
  long inside = 0;
  for (int i = 0; i < cells; ++i) {
    const double x = -halfwidth + (i + 0.5) * step;
    for (int j = 0; j < cells; ++j) {
      const double y = -halfwidth + (j + 0.5) * step;
      double mag;
      if (real) {
        double acc = re[0], ypow = 1.0;
        for (std::size_t k = 1; k < re.size(); ++k) {
          ypow *= y;
          acc = acc * x + re[k] * ypow;
        }
        mag = std::abs(acc);
      } else {
        mag = std::abs(eval_form(form, Complex(x), Complex(y)));
      }
      if (mag <= 1.0) ++inside;
    }
  }
  return static_cast<double>(inside) * step * step;
}

}  // namespace binform
