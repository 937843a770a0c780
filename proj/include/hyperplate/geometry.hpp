#pragma once

// Geodesic balls in the space form of curvature −κ² (κ = 0 is Euclidean space).

namespace hyperplate::geometry {

struct SpaceForm {
  int n = 2;
  double kappa = 1.0;

  SpaceForm() = default;
  SpaceForm(int dim, double k);

  double nu() const noexcept { return 0.5 * n - 1.0; }
};

/// Two balls of tilde radii α = sinh²(κa/2) and β = sinh²(κb/2) sharing the
/// volume of one ball of tilde radius L̃.
struct TwoBallConfig {
  double alpha = 0.0;
  double beta = 0.0;
  double total_tilde = 0.0;

  /// Completes the pair from α through the volume constraint.
  static TwoBallConfig from_alpha(const SpaceForm& sf, double alpha, double total_tilde);
};

/// Volume of the unit ball of Rⁿ.
double unit_ball_volume(int n);

double ball_volume(const SpaceForm& sf, double r);

/// log of ball_volume; stays finite where the volume itself overflows.
double log_ball_volume(const SpaceForm& sf, double r);

double tilde_of_radius(double kappa, double r);
double radius_of_tilde(double kappa, double t);

/// β with V(b) = V(L) − V(a). For κ = 0 the tilde coordinates are plain radii.
double beta_from_alpha(const SpaceForm& sf, double alpha, double total_tilde);

/// L₀ with 2·V(L₀) = V(L).
double half_volume_radius(const SpaceForm& sf, double L);

}  // namespace hyperplate::geometry
