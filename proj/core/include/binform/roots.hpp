#pragma once

#include <vector>

#include "binform/forms.hpp"

namespace binform {

/// One linear factor (alpha X - beta Y). It vanishes at the projective point
/// (x : y) = (beta : alpha). Pairs are normalized so that the component of
/// larger modulus is exactly 1; the root at infinity of F(x,1) (a factor Y)
/// is the pair (0, 1).
struct ProjectiveRoot {
  Complex alpha;
  Complex beta;

  /// Whether the factor is real up to a common complex scalar.
  bool is_real(double tol = 1e-9) const;
  /// Direction theta in [0, pi) with alpha cos(theta) = beta sin(theta).
  /// Uses real parts, so for a non-real pair this is the nearest real direction.
  double angle() const;
};

/// F = scale * prod_i (alpha_i X - beta_i Y).
struct RootSet {
  Complex scale;
  std::vector<ProjectiveRoot> pairs;

  int degree() const noexcept { return static_cast<int>(pairs.size()); }
  std::size_t real_count(double tol = 1e-9) const;
};

inline constexpr double kDefaultRootTol = 1e-13;
inline constexpr int kRootIterationBudget = 200;

/// Factors F over C. Leading zero coefficients become copies of the root at
/// infinity. Throws NoConvergence if the iteration misses `tol` within the
/// budget or the reconstructed coefficients disagree with F beyond
/// max(tol, 64 eps) relative error. When that failure comes with two roots
/// closer than 1e-5 the form is treated as having a repeated root and
/// DegenerateRoot is thrown instead.
RootSet roots(const BinaryForm& form, double tol = kDefaultRootTol);

/// Multiplies the factorization back out.
BinaryForm reconstruct(const RootSet& roots);

/// max_k |a_k - b_k| / max_k |a_k|.
double relative_coeff_error(const BinaryForm& reference, const BinaryForm& other);

/// scale^{2(n-1)} prod_{i<j} (alpha_i beta_j - alpha_j beta_i)^2.
Complex discriminant_float(const RootSet& roots);

/// Smallest |alpha_i beta_j - alpha_j beta_i| over pairs; zero for a repeated root.
double min_root_separation(const RootSet& roots);

}  // namespace binform
