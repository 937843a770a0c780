#pragma once

// Clamped-plate fundamental tones of geodesic balls and of the two-ball
// problem, the pole ladder of 𝒦_ν, and the bounds and asymptotics built on them.

#include <string>

#include "hyperplate/geometry.hpp"
#include "hyperplate/specfun.hpp"

namespace hyperplate::tones {

using geometry::SpaceForm;
using geometry::TwoBallConfig;

enum class ToneMethod { ClosedForm3D, Series2D, Euclidean, AsymptoticSmallL, AsymptoticLargeL };

std::string to_string(ToneMethod m);

struct ToneResult {
  double lambda = 0.0;
  double gamma = 0.0;  ///< λ⁴
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  ///< |normalized determinant| at the root
  int iterations = 0;
  ToneMethod method = ToneMethod::Euclidean;
  /// λ − (n−1)κ/2 computed without cancellation (λ itself when κ = 0).
  double excess = 0.0;
};

/// 𝒦_ν(λ, t) = d/dt ln 𝒢₋ − d/dt ln 𝒢₊. For κ = 0, t is the Euclidean radius.
double K_nu(const SpaceForm& sf, double lambda, double t);

/// 𝒦₀ through the hypergeometric ratio form in z = t/(1+t) (n = 2, complex
/// parameters). Independent of the evaluator behind K_nu; limited to moderate t.
double K0_ratio_form(double kappa, double lambda, double t);

/// d/ds ln 𝒢₋ − d/ds ln 𝒢₊ at half radius s, with 𝒢 taken at λ = κ√((n−1)²/4 + μ²).
/// 𝒦_ν = this / sinh(2s).
double log_slope_gap(int n, double mu, double s);

/// k-th zero in λ of 𝒢₋(ν, ·, t).
double pole_g(const SpaceForm& sf, int k, double t);

/// Same ladder in the excess frequency μ, at half radius s (κ-free).
double pole_mu(int n, int k, double s);

ToneResult fundamental_tone(const SpaceForm& sf, double L);
ToneResult two_ball_tone(const SpaceForm& sf, const TwoBallConfig& cfg);

double mckean_floor(const SpaceForm& sf);
double tone_asymptotic_small(const SpaceForm& sf, double L);
double tone_asymptotic_large_3d(double kappa, double L);
/// tone_asymptotic_large_3d^{1/4} − κ, free of cancellation.
double tone_asymptotic_large_3d_excess(double kappa, double L);

struct SharpnessGap {
  double g1 = 0.0;   ///< 𝔤_{ν,1}(L̃₀)
  double lam = 0.0;  ///< λ_ν(0, L̃)
  bool holds = false;
  double half_volume_radius = 0.0;
  double g1_excess = 0.0;
  double lam_excess = 0.0;
};

SharpnessGap sharpness_gap(const SpaceForm& sf, double L);

struct Threshold {
  double radius = 0.0;
  double volume_cap = 0.0;
};

Threshold threshold_radius(const SpaceForm& sf);

double cheng_yang_upper(const SpaceForm& sf, int l, double gamma1);

/// 2^{4/n}(j_{ν,1}/𝔥_ν)⁴
double ashbaugh_laugesen_Dn(int n);

/// Radial eigenfunction v = (1−r²)^ν[A𝒢₊ + B𝒢₋](r²/(1−r²)) in the Poincaré ball.
class EigenProfile {
public:
  double A = 0.0;
  double B = 0.0;
  double lambda = 0.0;
  double ball_tilde = 0.0;

  /// v at Poincaré radius r ∈ [0, tanh(κL/2)].
  double operator()(double r) const;

  /// A𝒢₊(L̃) + B𝒢₋(L̃), relative to |A𝒢₊(L̃)|.
  double boundary_residual() const;

private:
  friend EigenProfile eigenfunction_profile(const SpaceForm& sf, double L);
  int n_ = 3;
  double mu_ = 0.0;
  double boundary_half_radius_ = 0.0;
};

EigenProfile eigenfunction_profile(const SpaceForm& sf, double L);

}  // namespace hyperplate::tones
