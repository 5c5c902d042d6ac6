#pragma once

#include <vector>

#include "binform/forms.hpp"

namespace binform {

/// Univariate polynomial with coefficients ordered from the leading term
/// down: p[0] x^d + ... + p[d].
using RationalPoly = std::vector<Rational>;

/// The (deg p + deg q) square Sylvester matrix, row-major.
std::vector<std::vector<Rational>> sylvester_matrix(const RationalPoly& p, const RationalPoly& q);

/// Determinant of the Sylvester matrix. Both leading coefficients must be nonzero.
Rational resultant(const RationalPoly& p, const RationalPoly& q);

/// Discriminant of a univariate polynomial of exact degree d:
/// (-1)^{d(d-1)/2} Res(p, p') / lead(p), and 1 for d = 1.
Rational univariate_discriminant(const RationalPoly& p);

/// D_F of an exact form, equal to the root-product definition
/// lambda^{2(n-1)} prod_{i<j} (alpha_i beta_j - alpha_j beta_i)^2.
/// A vanishing leading coefficient is handled by splitting off the root at
/// infinity: D_F = a_1^2 Disc(F(x,1)) when a_0 = 0, and 0 when a_0 = a_1 = 0.
Rational discriminant_exact(const BinaryForm& form);

}  // namespace binform
