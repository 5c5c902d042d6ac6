#pragma once

#include <vector>

#include "binform/forms.hpp"
#include "binform/roots.hpp"

namespace binform {

inline constexpr double kDefaultAreaTol = 1e-9;
inline constexpr long kQuadratureBudget = 1L << 20;
inline constexpr double kRealRootTol = 1e-9;

struct AreaResult {
  double area = 0.0;                    // A_F
  double abs_error_estimate = 0.0;
  std::vector<double> singular_angles;  // sorted, in [0, 2 pi)
  int panels = 0;
  long evaluations = 0;
};

struct InvariantValue {
  double value = 0.0;           // |D_F|^{1/n(n-1)} A_F
  double disc_magnitude = 0.0;  // |D_F|
  double area = 0.0;            // A_F
};

/// Angles theta in [0, 2 pi) with F(cos theta, sin theta) = 0; two per
/// real projective root. Throws DegenerateRoot for a repeated real root.
std::vector<double> singular_angles(const BinaryForm& form, double tol = kRealRootTol);
std::vector<double> singular_angles(const RootSet& roots, double tol = kRealRootTol);

/// A_F = (1/2) int_0^{2 pi} |F(cos t, sin t)|^{-2/n} dt, evaluated over one
/// period of length pi. Panels start and end on real-root directions so the
/// integrable singularities sit exactly at panel endpoints; non-real roots
/// contribute breakpoints at their nearest real direction.
///
/// Throws DegreeTooLow (n < 3), DiscriminantZero, QuadratureFailure.
AreaResult area(const BinaryForm& form, double tol = kDefaultAreaTol);

/// Same computation from a known factorization. Only checks the degree and
/// root distinctness; used where the roots are known in closed form.
AreaResult area_from_roots(const RootSet& roots, double tol = kDefaultAreaTol);

/// |D_F|^{1/n(n-1)} A_F. D_F is exact for exact forms, otherwise taken from
/// the root product.
InvariantValue invariant(const BinaryForm& form, double tol = kDefaultAreaTol);
InvariantValue invariant_from_roots(const RootSet& roots, double tol = kDefaultAreaTol);

/// Cell-centre counting estimate of the area of {|F| <= 1} inside
/// [-halfwidth, halfwidth]^2 on a cells x cells grid. Only meaningful when
/// the box covers the region (e.g. definite forms); the caller chooses.
double area_oracle_grid(const BinaryForm& form, double halfwidth, int cells);

}  // namespace binform
