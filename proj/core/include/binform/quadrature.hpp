#pragma once

#include <functional>

namespace binform {

/// Integrand evaluated at x in (a, b). The two extra arguments carry x - a
/// and b - x computed without cancellation, so integrands with a
/// singularity located exactly at an endpoint can resolve it.
using EndpointIntegrand = std::function<double(double x, double from_left, double from_right)>;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;       // |I_level - I_{level-1}| at the final level
  long evaluations = 0;
  int levels = 0;
  bool converged = false;
};

struct TanhSinhOptions {
  double abs_tol = 1e-10;
  int max_level = 9;        // step h = 0.5 / 2^level
  int min_level = 3;
  double t_max = 6.1;       // e^{-pi sinh t} underflows past this
};

/// Double-exponential (tanh-sinh) rule on [a, b]. Nodes never touch the
/// endpoints, and each refinement level halves the step, reusing previous
/// nodes. Integrable algebraic endpoint singularities converge without
/// knowing the exponent.
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b,
                           const TanhSinhOptions& options = {});

}  // namespace binform
