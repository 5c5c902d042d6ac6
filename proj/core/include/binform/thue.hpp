#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binform/forms.hpp"

namespace binform {

enum class CountStrategy { DefiniteExact, BoxRestricted };

std::string_view to_string(CountStrategy strategy) noexcept;

/// N_F(h): the number of integer pairs with |F(x,y)| <= h.
struct LatticeCount {
  long count = 0;
  long h = 0;
  CountStrategy strategy = CountStrategy::DefiniteExact;
  std::optional<long> box;   // half-width, box-restricted counts only
  double radius = 0.0;       // enumeration radius, definite counts only
  std::vector<std::array<long, 2>> points;  // the solutions, definite counts only
};

/// Minimum of |F(cos t, sin t)|. Candidates are the real critical directions
/// (roots of -Y F_X + X F_Y), dense samples, and a golden-section refinement
/// of the best sample; exact forms are evaluated in rational arithmetic.
double min_on_circle(const BinaryForm& form);

/// True when F has no real projective root (so n is even).
bool is_definite(const BinaryForm& form);

/// Exact N_F(h) over all of Z^2 for a definite integer form: enumerates the
/// disk of radius (h / (0.99 m))^{1/n}, m = min_on_circle(F), with exact
/// integer evaluation. Throws NotDefinite, InvalidArgument (non-integer
/// coefficients or h < 0).
LatticeCount count_definite(const BinaryForm& form, long h);

/// Count restricted to [-halfwidth, halfwidth]^2. Per column x, the
/// qualifying y form a union of intervals bounded by real roots of
/// F(x, y) -+ h and critical points of F(x, .); integers near a boundary
/// are decided by exact evaluation.
LatticeCount count_box(const BinaryForm& form, long h, long halfwidth);

struct MahlerDiagnostic {
  long h = 0;
  long n_count = 0;
  double area_term = 0.0;     // A_F h^{2/n}
  double scaled_error = 0.0;  // |N - A_F h^{2/n}| / h^{1/(n-1)}
};

struct MahlerTable {
  CountStrategy strategy = CountStrategy::DefiniteExact;
  std::optional<long> box;
  double area = 0.0;
  double empirical_c = 0.0;   // max scaled_error over the rows
  std::string caveat;         // set for box-restricted counts
  std::vector<MahlerDiagnostic> rows;
};

/// One diagnostic per h (each h >= 1). BoxRestricted requires `halfwidth`.
MahlerTable mahler_table(const BinaryForm& form, std::span<const long> h_values,
                         CountStrategy strategy, std::optional<long> halfwidth = std::nullopt);

}  // namespace binform
