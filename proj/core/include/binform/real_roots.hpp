#pragma once

#include <span>
#include <vector>

namespace binform {

/// Real roots of p(y) = c[0] + c[1] y + ... + c[d] y^d (ascending order,
/// trailing zeros ignored), sorted and deduplicated. Roots are isolated by
/// recursing on p' so that each bracket between consecutive critical points
/// is monotone, then bisected inside a Cauchy bound. Touching roots (sign
/// does not change) are reported only when p vanishes at a critical point.
std::vector<long double> real_roots(std::span<const long double> ascending);

/// Cauchy bound 1 + max |c_i / c_d|.
long double cauchy_bound(std::span<const long double> ascending);

}  // namespace binform
