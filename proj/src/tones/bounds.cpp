#include <cmath>

#include "hyperplate/errors.hpp"
#include "hyperplate/tones.hpp"
#include "internal.hpp"

namespace hyperplate::tones {

using specfun::Branch;
using specfun::HyperParams;
using specfun::RadialPoint;

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_plate_form(const SpaceForm& sf) {
  if (!(sf.kappa > 0.0)) throw DomainError("this operation needs positive curvature scale");
  if (sf.n != 2 && sf.n != 3)
    throw DomainError("transcendental tones are available for n = 2 and n = 3 only");
}

// g1(L̃₀) − λ(0, L̃) in μ, at κ = 1
double gap_mu(int n, double L) {
  const SpaceForm unit(n, 1.0);
  const double s0 = 0.5 * geometry::half_volume_radius(unit, L);
  const double g1 = detail::pole_ladder_mu(n, 1, s0)[0];
  const auto tone = fundamental_tone(unit, L);
  const double h = 0.5 * (n - 1);
  const double lam_mu = std::sqrt(tone.excess * (tone.excess + 2.0 * h));
  return g1 - lam_mu;
}

}  // namespace

double mckean_floor(const SpaceForm& sf) {
  const double a = (sf.n - 1) * sf.kappa;
  return a * a * a * a / 16.0;
}

double tone_asymptotic_small(const SpaceForm& sf, double L) {
  if (!(L > 0.0)) throw DomainError("radius must be positive");
  const double h = specfun::cross_product_root(sf.nu());
  if (sf.kappa == 0.0) return std::pow(h / L, 4);
  const double a = 0.5 * (sf.n - 1) * sf.kappa;
  const double q = a * a + (h / L) * (h / L);
  return q * q;
}

double tone_asymptotic_large_3d(double kappa, double L) {
  if (!(kappa > 0.0) || !(L > 0.0)) throw DomainError("kappa and L must be positive");
  const double x = kPi / (kappa * L);
  const double q = 1.0 + x * x;
  return std::pow(kappa, 4) * q * q;
}

double tone_asymptotic_large_3d_excess(double kappa, double L) {
  if (!(kappa > 0.0) || !(L > 0.0)) throw DomainError("kappa and L must be positive");
  const double x = kPi / (kappa * L);
  return kappa * x * x / (std::sqrt(1.0 + x * x) + 1.0);
}

SharpnessGap sharpness_gap(const SpaceForm& sf, double L) {
  require_plate_form(sf);
  if (!(L > 0.0)) throw DomainError("radius must be positive");
  SharpnessGap out;
  out.half_volume_radius = geometry::half_volume_radius(sf, L);
  const double g1_mu = detail::pole_ladder_mu(sf.n, 1, 0.5 * sf.kappa * out.half_volume_radius)[0];
  const auto tone = fundamental_tone(sf, L);
  out.g1 = detail::lambda_of_mu(sf.n, sf.kappa, g1_mu);
  out.g1_excess = detail::excess_of_mu(sf.n, sf.kappa, g1_mu);
  out.lam = tone.lambda;
  out.lam_excess = tone.excess;
  out.holds = out.g1_excess >= out.lam_excess;
  return out;
}

Threshold threshold_radius(const SpaceForm& sf) {
  require_plate_form(sf);
  // everything scales with κL; scan at κ = 1
  const double step = 0.01;
  double prev = step;
  for (int i = 1; i <= 1000; ++i) {
    const double L = i * step;
    if (gap_mu(sf.n, L) >= 0.0) {
      prev = L;
      continue;
    }
    if (i == 1) throw SolverError("comparison already fails at the first scan radius");
    double lo = prev, hi = L;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi || hi - lo < 1e-13) break;
      if (gap_mu(sf.n, mid) >= 0.0)
        lo = mid;
      else
        hi = mid;
    }
    Threshold out;
    out.radius = 0.5 * (lo + hi) / sf.kappa;
    out.volume_cap = geometry::ball_volume(sf, out.radius);
    return out;
  }
  throw SolverError("no sign change of the comparison gap in the scan window");
}

double cheng_yang_upper(const SpaceForm& sf, int l, double gamma1) {
  if (l < 1) throw DomainError("eigenvalue index must be at least 1");
  const double floor = mckean_floor(sf);
  if (!(gamma1 >= floor)) throw DomainError("first eigenvalue below the McKean floor");
  return floor + 25.0 * std::pow(double(l), 12) * (gamma1 - floor);
}

double ashbaugh_laugesen_Dn(int n) {
  if (n < 4) throw DomainError("D_n is defined for n >= 4");
  const double nu = 0.5 * n - 1.0;
  const double r = specfun::bessel_first_zero(nu) / specfun::cross_product_root(nu);
  return std::pow(2.0, 4.0 / n) * std::pow(r, 4);
}

double EigenProfile::operator()(double r) const {
  const double edge = std::tanh(boundary_half_radius_);
  if (!(r >= 0.0) || r > edge * (1.0 + 1e-15))
    throw DomainError("profile radius outside [0, tanh(kappa L / 2)]");
  const double s = std::atanh(std::min(r, edge));
  const auto p = HyperParams::from_excess_frequency(n_, 1.0, mu_);
  const auto x = RadialPoint::from_half_radius(s);
  const auto gp = specfun::evaluate_G(Branch::Plus, p, x);
  const auto gm = specfun::evaluate_G(Branch::Minus, p, x);
  // (1 − r²)^ν = cosh(s)^{−2ν}
  const double log_conf = -(n_ - 2) * std::log(std::cosh(s));
  const double plus = A * gp.value * std::exp(gp.log_scale + log_conf);
  const double minus = B * gm.value * std::exp(gm.log_scale + log_conf);
  return plus + minus;
}

double EigenProfile::boundary_residual() const {
  const auto p = HyperParams::from_excess_frequency(n_, 1.0, mu_);
  const auto x = RadialPoint::from_half_radius(boundary_half_radius_);
  const auto gp = specfun::evaluate_G(Branch::Plus, p, x);
  const auto gm = specfun::evaluate_G(Branch::Minus, p, x);
  const double plus = A * gp.value;
  const double minus = B * gm.value * std::exp(gm.log_scale - gp.log_scale);
  return std::fabs(plus + minus) / std::fabs(plus);
}

EigenProfile eigenfunction_profile(const SpaceForm& sf, double L) {
  require_plate_form(sf);
  const auto tone = fundamental_tone(sf, L);
  const double h = 0.5 * (sf.n - 1);
  const double e = tone.excess / sf.kappa;
  EigenProfile out;
  out.n_ = sf.n;
  out.mu_ = std::sqrt(e * (e + 2.0 * h));
  out.boundary_half_radius_ = 0.5 * sf.kappa * L;
  out.lambda = tone.lambda;
  out.ball_tilde = geometry::tilde_of_radius(sf.kappa, L);
  const auto p = HyperParams::from_excess_frequency(sf.n, 1.0, out.mu_);
  const auto x = RadialPoint::from_half_radius(out.boundary_half_radius_);
  const auto gp = specfun::evaluate_G(Branch::Plus, p, x);
  const auto gm = specfun::evaluate_G(Branch::Minus, p, x);
  // A + B = 1 and A𝒢₊ + B𝒢₋ = 0 at the boundary
  const double ratio = gm.value / gp.value * std::exp(gm.log_scale - gp.log_scale);
  out.A = ratio / (ratio - 1.0);
  out.B = -1.0 / (ratio - 1.0);
  return out;
}

}  // namespace hyperplate::tones
