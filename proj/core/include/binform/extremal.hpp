#pragma once

#include <cstdint>
#include <vector>

#include "binform/forms.hpp"
#include "binform/roots.hpp"

namespace binform {

/// Directions of n distinct real projective roots: strictly increasing
/// angles in [0, pi). The form is prod_i (X sin(theta_i) - Y cos(theta_i)).
struct RealRootConfig {
  std::vector<double> angles;

  int degree() const noexcept { return static_cast<int>(angles.size()); }
  /// Three consecutive angles pinned at 0, pi/4, pi/2 (the optimizer's gauge).
  bool is_gauge_fixed() const;
};

inline constexpr double kMinAngleGap = 1e-12;

/// Throws DegenerateAngles if two angles coincide within 1e-12 (mod pi),
/// InvalidArgument if angles are unsorted or outside [0, pi).
void validate(const RealRootConfig& config);

BinaryForm form_from_angles(const RealRootConfig& config);
/// The exact factorization of form_from_angles(config) (scale 1).
RootSet roots_from_angles(const RealRootConfig& config);

/// Root directions of F_n*, reduced to [0, pi): {0, pi/n, ..., (n-1) pi/n}.
RealRootConfig fstar_config(int n);

/// Moves three cyclically consecutive roots (starting at `first`) to
/// 0, pi/4, pi/2 with a GL2(R) change of variables; the remaining roots land
/// in (pi/2, pi). The invariant is unchanged.
RealRootConfig gauge_fix(const RealRootConfig& config, int first = 0);

struct OptimizerReport {
  int iterations = 0;       // summed over restarts
  int restarts = 0;
  bool converged = false;   // every restart met the simplex-size criterion
  bool restarts_agree = false;
  double spread = 0.0;      // best minus worst restart value
};

struct MnEstimate {
  int n = 0;
  double value = 0.0;                 // estimated M_n
  double fstar_value = 0.0;           // invariant of F_n*
  RealRootConfig argmax_config;       // gauge-fixed
  double distance_to_fstar = 0.0;     // max angle difference to gauge-fixed F_n*
  OptimizerReport report;
};

struct MnOptions {
  int restarts = 8;
  double simplex_tol = 1e-7;     // simplex size in the free coordinates
  double agree_tol = 1e-6;
  double quad_tol = 1e-10;
  int max_iterations = 4000;
  std::uint64_t seed = 20240601;
};

/// Maximizes |D_F|^{1/n(n-1)} A_F over forms with n distinct real roots.
/// Three roots are pinned; the n-3 free angles in (pi/2, pi) are mapped to
/// unconstrained coordinates by a softmax over the gaps with a minimum
/// separation of 1e-6. Restart 0 starts at F_n*; the rest start from jittered
/// F_n* angles and uniform random configurations. Restarts run concurrently
/// and the reduction is order independent.
MnEstimate estimate_mn(int n, const MnOptions& options = {});

struct ConjectureRow {
  int n = 0;
  double mn = 0.0;
  double fstar = 0.0;
  double gap_to_fstar = 0.0;   // mn - fstar; positive would contradict the conjecture
  double above_two_pi = 0.0;   // mn - 2 pi
  bool monotone = true;        // strictly below the previous row
  double distance_to_fstar = 0.0;
  bool converged = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  bool monotone = true;
  bool all_above_two_pi = true;
  double two_pi = 0.0;
};

ConjectureReport conjecture_report(int n_max, const MnOptions& options = {});

}  // namespace binform
