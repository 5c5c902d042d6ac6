#include "binform/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace binform {

QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b,
                           const TanhSinhOptions& options) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  const double width = b - a;
  const double half = 0.5 * width;
  const double mid = a + half;

  QuadratureResult out;
  double weighted_sum = 0.0;  // sum of f * dx/dt over all nodes so far

  // Adds the symmetric node pair at parameter t (t > 0).
  auto add_pair = [&](double t) {
    const double u = kHalfPi * std::sinh(t);
    const double q = std::exp(-2.0 * u);
    const double delta = width * q / (1.0 + q);
    if (!(delta > 0.0)) return;
    const double dxdt = half * kHalfPi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
    const double left = f(a + delta, delta, width - delta);
    const double right = f(b - delta, width - delta, delta);
    out.evaluations += 2;
    if (std::isfinite(left)) weighted_sum += left * dxdt;
    if (std::isfinite(right)) weighted_sum += right * dxdt;
  };

  double h = 0.5;
  weighted_sum += f(mid, half, half) * half * kHalfPi;
  ++out.evaluations;
  for (int k = 1; k * h <= options.t_max; ++k) add_pair(k * h);
  double previous = h * weighted_sum;
  out.value = previous;

  for (int level = 1; level <= options.max_level; ++level) {
    h *= 0.5;
    for (int k = 1; k * h <= options.t_max; k += 2) add_pair(k * h);
    out.value = h * weighted_sum;
    out.error = std::abs(out.value - previous);
    out.levels = level;
    if (level >= options.min_level && out.error <= options.abs_tol) {
      out.converged = true;
      break;
    }
    previous = out.value;
  }
  return out;
}

}  // namespace binform
