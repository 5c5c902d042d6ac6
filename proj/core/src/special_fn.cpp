#include "binform/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "binform/error.hpp"

namespace binform {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_sum(double z) {
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  return acc;
}

void check_domain(double x, const char* what) {
  if (!(x > 0.0)) throw Error(ErrorCode::DomainError, std::string(what) + " requires a positive argument");
}

}  // namespace

double gamma(double x) {
  check_domain(x, "gamma");
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // t^{z+1/2} split in two halves so the power does not overflow before exp(-t).
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(double x) {
  check_domain(x, "log_gamma");
  if (x < 0.5)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double beta(double a, double b) {
  check_domain(a, "beta");
  check_domain(b, "beta");
  const auto [lo, hi] = std::minmax(a, b);
  const double direct = gamma(lo) * gamma(hi) / gamma(lo + hi);
  if (std::isfinite(direct) && direct > 0.0) return direct;
  return std::exp(log_gamma(lo) + log_gamma(hi) - log_gamma(lo + hi));
}

BoundConstant bound_constant() {
  return {3.0 * beta(1.0 / 3.0, 1.0 / 3.0), "3 * Gamma(1/3)^2 / Gamma(2/3), Lanczos g=7"};
}

}  // namespace binform
