#pragma once

#include "binform/forms.hpp"

namespace binform {

/// P_k = X^{2k} + (X - Y)^2 (2X - Y)^2 ... (kX - Y)^2, exact integer
/// coefficients. Positive definite, with P_k(1, j) = 1 for 1 <= j <= k.
BinaryForm make_pk(int k);

/// F_n* = prod_{k=1}^{n} (X sin(k pi/n) - Y cos(k pi/n)), roots equally
/// spaced in direction. The product equals 2^{1-n} Im (X + iY)^n, so the
/// coefficients are exact rationals. Requires n >= 3.
BinaryForm make_fstar(int n);

}  // namespace binform
