#include "binform/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <mutex>
#include <random>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include "binform/area.hpp"
#include "binform/parallel.hpp"

namespace binform {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinSeparation = 1e-6;
constexpr double kPenalty = 1e10;

double reduce_mod_pi(double t) {
  t = std::fmod(t, kPi);
  if (t < 0) t += kPi;
  if (t >= kPi) t -= kPi;
  return t;
}

// Free angles in (pi/2, pi) <-> unconstrained softmax logits.
class GapChart {
 public:
  explicit GapChart(int n) : n_(n), free_(n - 3), spread_(0.5 * kPi - (n - 2) * kMinSeparation) {}

  int dimension() const { return free_; }

  std::vector<double> angles(const double* z) const {
    std::vector<double> logits(free_ + 1, 0.0);
    for (int i = 0; i < free_; ++i) logits[i + 1] = z[i];
    const double top = *std::max_element(logits.begin(), logits.end());
    double total = 0.0;
    for (auto& l : logits) total += (l = std::exp(l - top));
    std::vector<double> out{0.0, 0.25 * kPi, 0.5 * kPi};
    double at = 0.5 * kPi;
    for (int i = 0; i < free_; ++i) {
      at += kMinSeparation + spread_ * logits[i] / total;
      out.push_back(at);
    }
    return out;
  }

  std::vector<double> coords(const RealRootConfig& fixed) const {
    std::vector<double> gaps;
    double prev = 0.5 * kPi;
    for (int i = 3; i < n_; ++i) {
      gaps.push_back(fixed.angles[i] - prev);
      prev = fixed.angles[i];
    }
    gaps.push_back(kPi - prev);
    auto weight = [&](double g) { return std::max((g - kMinSeparation) / spread_, 1e-300); };
    std::vector<double> z;
    for (int i = 1; i <= free_; ++i) z.push_back(std::log(weight(gaps[i]) / weight(gaps[0])));
    return z;
  }

 private:
  int n_;
  int free_;
  double spread_;
};

struct Objective {
  const GapChart* chart;
  double quad_tol;
};

double negated_invariant(const gsl_vector* v, void* params) {
  const auto* obj = static_cast<const Objective*>(params);
  try {
    const RealRootConfig config{obj->chart->angles(v->data)};
    return -invariant_from_roots(roots_from_angles(config), obj->quad_tol).value;
  } catch (const Error&) {
    return kPenalty;
  }
}

struct RestartResult {
  double value = 0.0;
  std::vector<double> angles;
  int iterations = 0;
  bool converged = false;
};

RestartResult run_simplex(const GapChart& chart, std::vector<double> start, const MnOptions& opts) {
  const int dim = chart.dimension();
  Objective obj{&chart, opts.quad_tol};
  gsl_multimin_function fn{&negated_invariant, static_cast<std::size_t>(dim), &obj};

  gsl_vector* x = gsl_vector_alloc(dim);
  gsl_vector* step = gsl_vector_alloc(dim);
  for (int i = 0; i < dim; ++i) gsl_vector_set(x, i, start[i]);
  gsl_vector_set_all(step, 0.3);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
  gsl_multimin_fminimizer_set(s, &fn, x, step);

  RestartResult out;
  for (out.iterations = 0; out.iterations < opts.max_iterations;) {
    ++out.iterations;
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), opts.simplex_tol) == GSL_SUCCESS) {
      out.converged = true;
      break;
    }
  }
  out.value = -gsl_multimin_fminimizer_minimum(s);
  out.angles = chart.angles(gsl_multimin_fminimizer_x(s)->data);

  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return out;
}

}  // namespace

bool RealRootConfig::is_gauge_fixed() const {
  if (angles.size() < 3) return false;
  return angles[0] == 0.0 && angles[1] == 0.25 * kPi && angles[2] == 0.5 * kPi;
}

void validate(const RealRootConfig& config) {
  const auto& a = config.angles;
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "empty angle configuration");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] >= 0.0 && a[i] < kPi))
      throw Error(ErrorCode::InvalidArgument, "root angles must lie in [0, pi)");
    if (i > 0 && a[i] < a[i - 1])
      throw Error(ErrorCode::InvalidArgument, "root angles must be increasing");
    if (i > 0 && a[i] - a[i - 1] < kMinAngleGap)
      throw Error(ErrorCode::DegenerateAngles, "two root angles coincide");
  }
  if (a.size() > 1 && a.front() + kPi - a.back() < kMinAngleGap)
    throw Error(ErrorCode::DegenerateAngles, "first and last root angles coincide mod pi");
}

RootSet roots_from_angles(const RealRootConfig& config) {
  validate(config);
  RootSet out;
  out.scale = 1.0;
  for (double t : config.angles) {
    double s = std::sin(t), c = std::cos(t);
    if (t == 0.0) s = 0.0, c = 1.0;
    if (t == 0.5 * kPi) s = 1.0, c = 0.0;
    if (std::abs(s) >= std::abs(c)) {
      out.pairs.push_back({Complex(1.0), Complex(c / s)});
      out.scale *= s;
    } else {
      out.pairs.push_back({Complex(s / c), Complex(1.0)});
      out.scale *= c;
    }
  }
  return out;
}

BinaryForm form_from_angles(const RealRootConfig& config) {
  return reconstruct(roots_from_angles(config));
}

RealRootConfig fstar_config(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "F_n* needs n >= 3");
  RealRootConfig out;
  for (int k = 0; k < n; ++k) out.angles.push_back(k * kPi / n);
  return out;
}

RealRootConfig gauge_fix(const RealRootConfig& config, int first) {
  validate(config);
  const int n = config.degree();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "gauge fixing needs at least three roots");
  const int i1 = ((first % n) + n) % n, i2 = (i1 + 1) % n, i3 = (i1 + 2) % n;
  auto point = [&](int i) {
    return std::array<double, 2>{std::cos(config.angles[i]), std::sin(config.angles[i])};
  };
  const auto p1 = point(i1), p2 = point(i2), p3 = point(i3);
  // p2 = mu p1 + nu p3; the inverse map sends (1,0) -> mu p1, (0,1) -> nu p3.
  const double det = p1[0] * p3[1] - p3[0] * p1[1];
  const double mu = (p2[0] * p3[1] - p3[0] * p2[1]) / det;
  const double nu = (p1[0] * p2[1] - p2[0] * p1[1]) / det;
  const double ia = mu * p1[0], ib = nu * p3[0], ic = mu * p1[1], id = nu * p3[1];
  const double idet = ia * id - ib * ic;

  RealRootConfig out{{0.0, 0.25 * kPi, 0.5 * kPi}};
  std::vector<double> rest;
  for (int i = 0; i < n; ++i) {
    if (i == i1 || i == i2 || i == i3) continue;
    const auto q = point(i);
    const double x = (id * q[0] - ib * q[1]) / idet;
    const double y = (-ic * q[0] + ia * q[1]) / idet;
    rest.push_back(reduce_mod_pi(std::atan2(y, x)));
  }
  std::sort(rest.begin(), rest.end());
  out.angles.insert(out.angles.end(), rest.begin(), rest.end());
  return out;
}

MnEstimate estimate_mn(int n, const MnOptions& options) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "M_n is defined for n >= 3");
  if (options.restarts < 1) throw Error(ErrorCode::InvalidArgument, "need at least one restart");

  static std::once_flag gsl_quiet;
  std::call_once(gsl_quiet, [] { gsl_set_error_handler_off(); });

  MnEstimate out;
  out.n = n;
  const RealRootConfig fstar = gauge_fix(fstar_config(n));
  out.fstar_value = invariant_from_roots(roots_from_angles(fstar), options.quad_tol).value;

  if (n == 3) {
    out.value = out.fstar_value;
    out.argmax_config = fstar;
    out.report = {0, 1, true, true, 0.0};
    return out;
  }

  const GapChart chart(n);
  const auto center = chart.coords(fstar);
  std::vector<RestartResult> results(options.restarts);
  parallel_for(results.size(), [&](std::size_t idx) {
    std::mt19937_64 rng(options.seed + 0x9E3779B97F4A7C15ULL * (idx + 1));
    std::vector<double> start = center;
    if (idx % 2 == 1) {
      std::normal_distribution<double> jitter(0.0, 0.5);
      for (auto& z : start) z += jitter(rng);
    } else if (idx > 0) {
      std::uniform_real_distribution<double> uniform(-3.0, 3.0);
      for (auto& z : start) z = uniform(rng);
    }
    results[idx] = run_simplex(chart, start, options);
  });

  std::size_t best = 0;
  double worst = results[0].value;
  out.report.restarts = options.restarts;
  out.report.converged = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
    worst = std::min(worst, results[i].value);
    out.report.iterations += results[i].iterations;
    out.report.converged = out.report.converged && results[i].converged;
  }
  out.value = results[best].value;
  out.argmax_config = RealRootConfig{results[best].angles};
  out.report.spread = out.value - worst;
  out.report.restarts_agree = out.report.spread <= options.agree_tol;

  for (int i = 0; i < n; ++i)
    out.distance_to_fstar = std::max(out.distance_to_fstar,
                                     std::abs(out.argmax_config.angles[i] - fstar.angles[i]));
  return out;
}

ConjectureReport conjecture_report(int n_max, const MnOptions& options) {
  if (n_max < 3) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 3");
  ConjectureReport out;
  out.two_pi = 2.0 * kPi;
  for (int n = 3; n <= n_max; ++n) {
    const MnEstimate est = estimate_mn(n, options);
    ConjectureRow row;
    row.n = n;
    row.mn = est.value;
    row.fstar = est.fstar_value;
    row.gap_to_fstar = est.value - est.fstar_value;
    row.above_two_pi = est.value - out.two_pi;
    row.monotone = out.rows.empty() || est.value < out.rows.back().mn;
    row.distance_to_fstar = est.distance_to_fstar;
    row.converged = est.report.converged;
    out.monotone = out.monotone && row.monotone;
    out.all_above_two_pi = out.all_above_two_pi && row.above_two_pi > 0.0;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace binform
