#include "binform/real_roots.hpp"

#include <algorithm>
#include <cmath>

namespace binform {
namespace {

long double horner(std::span<const long double> c, long double y) {
  long double acc = 0.0L;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + c[i];
  return acc;
}

int sign(long double v) { return (v > 0) - (v < 0); }

// Bisection on a bracket with a strict sign change, down to adjacent
// long doubles or relative width 1e-15.
long double bisect(std::span<const long double> c, long double lo, long double hi, int sign_lo) {
  for (int iter = 0; iter < 200; ++iter) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 1e-15L * std::max(1.0L, std::abs(mid))) break;
    const int s = sign(horner(c, mid));
    if (s == 0) return mid;
    if (s == sign_lo) lo = mid;
    else hi = mid;
  }
  return 0.5L * (lo + hi);
}

std::span<const long double> trimmed(std::span<const long double> c) {
  std::size_t d = c.size();
  while (d > 0 && c[d - 1] == 0.0L) --d;
  return c.first(d);
}

}  // namespace

long double cauchy_bound(std::span<const long double> ascending) {
  const auto c = trimmed(ascending);
  if (c.size() < 2) return 1.0L;
  const long double lead = std::abs(c.back());
  long double m = 0.0L;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i]) / lead);
  return 1.0L + m;
}

std::vector<long double> real_roots(std::span<const long double> ascending) {
  const auto c = trimmed(ascending);
  if (c.size() < 2) return {};
  if (c.size() == 2) return {-c[0] / c[1]};

  std::vector<long double> deriv;
  for (std::size_t i = 1; i < c.size(); ++i) deriv.push_back(c[i] * static_cast<long double>(i));
  const auto critical = real_roots(deriv);

  const long double bound = cauchy_bound(c);
  std::vector<long double> fences{-bound};
  for (long double x : critical)
    if (x > -bound && x < bound) fences.push_back(x);
  fences.push_back(bound);

  std::vector<long double> out;
  for (std::size_t i = 0; i + 1 < fences.size(); ++i) {
    const long double lo = fences[i], hi = fences[i + 1];
    const int slo = sign(horner(c, lo));
    const int shi = sign(horner(c, hi));
    if (slo == 0) out.push_back(lo);
    if (slo != 0 && shi != 0 && slo != shi) out.push_back(bisect(c, lo, hi, slo));
  }
  if (sign(horner(c, fences.back())) == 0) out.push_back(fences.back());

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace binform
