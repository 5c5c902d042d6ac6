#pragma once

#include <cstdint>
#include <random>

#include "binform/forms.hpp"

namespace binform::testing {

// Counts integer points with |F(x, y)| <= h in [-halfwidth, halfwidth]^2 by
// evaluating every point exactly.
long brute_count(const BinaryForm& form, long h, long halfwidth);

// Random integer form of the given degree, coefficients uniform in
// [-bound, bound], redrawn until the exact discriminant is nonzero.
BinaryForm random_integer_form(std::mt19937_64& rng, int degree, long bound = 20);

// Random real map with |det| in [det_lo, det_hi].
LinearMap random_map(std::mt19937_64& rng, double det_lo = 0.2, double det_hi = 5.0);

// Random integer map with entries in [-bound, bound] and nonzero determinant.
LinearMap random_integer_map(std::mt19937_64& rng, long bound = 3);

}  // namespace binform::testing
