#pragma once

// Finite-difference reference for radial eigenproblems on geodesic balls.

#include <vector>

#include "hyperplate/geometry.hpp"

namespace hyperplate::oracle {

using geometry::SpaceForm;

/// Uniform vertex grid ρ_i = i·h, i = 0..n_points, on [0, L].
struct RadialGrid {
  int n_points = 0;
  double radius = 0.0;
  double spacing = 0.0;
  std::vector<double> weight;  ///< s_κ(ρ_i)^{n−1}

  static RadialGrid make(const SpaceForm& sf, double L, int n_points);
};

struct IterationReport {
  double eigenvalue = 0.0;
  int iterations = 0;
};

/// Smallest eigenvalue of Δ² with v = v' = 0 at ρ = L, radial functions.
IterationReport fd_plate_solve(const SpaceForm& sf, double L, const RadialGrid& grid);
double fd_plate_tone(const SpaceForm& sf, double L, const RadialGrid& grid);

/// Smallest eigenvalue of −Δ with v = 0 at ρ = L, radial functions.
IterationReport fd_membrane_solve(const SpaceForm& sf, double L, const RadialGrid& grid);
double fd_membrane_tone(const SpaceForm& sf, double L, const RadialGrid& grid);

}  // namespace hyperplate::oracle
