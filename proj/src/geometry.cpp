#include "hyperplate/geometry.hpp"

#include <cmath>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hyperplate/errors.hpp"

namespace hyperplate::geometry {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr int kBisectionCap = 200;

// log(sinh x) for x > 0
double log_sinh(double x) {
  if (x < 20.0) return std::log(std::sinh(x));
  return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
}

// sinh(y) − y for y ≥ 0 without cancellation near 0
double sinh_minus_arg(double y) {
  if (y < 0.5) {
    const double y2 = y * y;
    double term = y * y2 / 6.0, sum = 0.0;
    for (int k = 1; k < 30 && term > 1e-18 * (sum + term); ++k) {
      sum += term;
      term *= y2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return sum;
  }
  return std::sinh(y) - y;
}

double log_sinh_minus_arg(double y) {
  if (y < 30.0) return std::log(sinh_minus_arg(y));
  return y - kLn2 + std::log1p(-std::exp(-2.0 * y) - 2.0 * y * std::exp(-y));
}

// ∫₀^r sinh(κρ)^{n−1} dρ, generic dimension
double sinh_power_integral(int n, double kappa, double r) {
  auto f = [&](double rho) { return std::pow(std::sinh(kappa * rho), n - 1); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, r, 15, 1e-14);
}

void check_form(const SpaceForm& sf) {
  if (sf.n < 2) throw DomainError("dimension must be at least 2");
  if (!(sf.kappa >= 0.0) || !std::isfinite(sf.kappa))
    throw DomainError("curvature scale must be finite and non-negative");
}

// Bisection on an increasing function to floating-point resolution.
double invert_increasing(const std::function<double(double)>& f, double target, double lo,
                         double hi) {
  for (int it = 0; it < kBisectionCap; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SpaceForm::SpaceForm(int dim, double k) : n(dim), kappa(k) { check_form(*this); }

TwoBallConfig TwoBallConfig::from_alpha(const SpaceForm& sf, double alpha, double total_tilde) {
  return {alpha, beta_from_alpha(sf, alpha, total_tilde), total_tilde};
}

double unit_ball_volume(int n) {
  return std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double ball_volume(const SpaceForm& sf, double r) {
  check_form(sf);
  if (!(r >= 0.0)) throw DomainError("radius must be non-negative");
  if (r == 0.0) return 0.0;
  const double k = sf.kappa;
  if (k == 0.0) return unit_ball_volume(sf.n) * std::pow(r, sf.n);
  if (sf.n == 2) {
    const double sh = std::sinh(0.5 * k * r);
    return 4.0 * kPi * sh * sh / (k * k);
  }
  if (sf.n == 3) return kPi * sinh_minus_arg(2.0 * k * r) / (k * k * k);
  return sf.n * unit_ball_volume(sf.n) * sinh_power_integral(sf.n, k, r) /
         std::pow(k, sf.n - 1);
}

double log_ball_volume(const SpaceForm& sf, double r) {
  check_form(sf);
  if (!(r >= 0.0)) throw DomainError("radius must be non-negative");
  if (r == 0.0) return -INFINITY;
  const double k = sf.kappa;
  if (k == 0.0) return std::log(unit_ball_volume(sf.n)) + sf.n * std::log(r);
  if (sf.n == 2) return std::log(4.0 * kPi) + 2.0 * log_sinh(0.5 * k * r) - 2.0 * std::log(k);
  if (sf.n == 3) return std::log(kPi) + log_sinh_minus_arg(2.0 * k * r) - 3.0 * std::log(k);
  return std::log(ball_volume(sf, r));
}

double tilde_of_radius(double kappa, double r) {
  if (!(kappa > 0.0)) throw DomainError("tilde coordinate needs positive curvature scale");
  if (!(r >= 0.0)) throw DomainError("radius must be non-negative");
  const double sh = std::sinh(0.5 * kappa * r);
  return sh * sh;
}

double radius_of_tilde(double kappa, double t) {
  if (!(kappa > 0.0)) throw DomainError("tilde coordinate needs positive curvature scale");
  if (!(t >= 0.0)) throw DomainError("tilde coordinate must be non-negative");
  return 2.0 * std::asinh(std::sqrt(t)) / kappa;
}

double beta_from_alpha(const SpaceForm& sf, double alpha, double total_tilde) {
  check_form(sf);
  if (!(alpha >= 0.0) || !(total_tilde >= 0.0))
    throw DomainError("tilde radii must be non-negative");
  if (alpha > total_tilde) throw DomainError("alpha exceeds the total volume");
  if (alpha == 0.0) return total_tilde;
  if (alpha == total_tilde) return 0.0;
  if (sf.kappa == 0.0) {
    const double n = sf.n;
    return total_tilde * std::pow(1.0 - std::pow(alpha / total_tilde, n), 1.0 / n);
  }
  if (sf.n == 2) return total_tilde - alpha;
  // Volume depends on the tilde radius only through κ-free factors; work at κ = 1.
  const SpaceForm unit(sf.n, 1.0);
  const double rl = radius_of_tilde(1.0, total_tilde);
  const double ra = radius_of_tilde(1.0, alpha);
  const double log_vl = log_ball_volume(unit, rl);
  // log(V(L) − V(a)) = log V(L) + log1p(−V(a)/V(L))
  const double target = log_vl + std::log1p(-std::exp(log_ball_volume(unit, ra) - log_vl));
  const double rb = invert_increasing([&](double r) { return log_ball_volume(unit, r); }, target,
                                      0.0, rl);
  return tilde_of_radius(1.0, rb);
}

double half_volume_radius(const SpaceForm& sf, double L) {
  check_form(sf);
  if (!(L > 0.0)) throw DomainError("radius must be positive");
  if (sf.kappa == 0.0) return std::pow(2.0, -1.0 / sf.n) * L;
  const double target = log_ball_volume(sf, L) - kLn2;
  return invert_increasing([&](double r) { return log_ball_volume(sf, r); }, target, 0.0, L);
}

}  // namespace hyperplate::geometry
