#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "hyperplate/errors.hpp"
#include "hyperplate/tones.hpp"
#include "internal.hpp"

namespace hyperplate::tones {

using specfun::Branch;
using specfun::HyperParams;
using specfun::RadialPoint;

namespace {

constexpr double kPi = 3.14159265358979323846;
// 𝒢₋ counts as zero once it is within a few rounding units of its slope
constexpr double kPoleGuard = 1e-14;

// S'/S for S = sinh(Λs)/Λ, sin(ωs)/ω or s
double closed_log_slope(double lambda_sq, double s) {
  const double x2 = lambda_sq * s * s;
  if (std::fabs(x2) < 1e-8) return (1.0 + 0.5 * x2) / (s * (1.0 + x2 / 6.0));
  if (lambda_sq > 0.0) {
    const double lam = std::sqrt(lambda_sq);
    return lam / std::tanh(lam * s);
  }
  const double w = std::sqrt(-lambda_sq);
  return w / std::tan(w * s);
}

std::complex<double> complex_series(std::complex<double> a, std::complex<double> b, double c,
                                    double z) {
  std::complex<double> term = 1.0, sum = 1.0;
  for (long k = 0; k < 100000; ++k) {
    const std::complex<double> ratio = (a + double(k)) * (b + double(k)) / ((c + k) * (k + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (std::abs(ratio) < 1.0 && std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
  }
  throw EvaluationError("mapped hypergeometric series did not converge", std::abs(sum),
                        std::abs(term), 100000);
}

double nearest_pole(const SpaceForm& sf, double lambda, double t) {
  double best = pole_g(sf, 1, t);
  for (int k = 2; k < 1000; ++k) {
    const double g = pole_g(sf, k, t);
    if (std::fabs(g - lambda) < std::fabs(best - lambda)) best = g;
    if (g > lambda) break;
  }
  return best;
}

}  // namespace

namespace detail {

LogSlopes log_slopes(const HyperParams& p, double s) {
  if (p.n == 3) {
    // zero of 𝒢₋ shows up as an infinite cotangent
    const double minus = closed_log_slope(p.lambda_minus_sq, s);
    const double w2 = -p.lambda_minus_sq;
    const double phase = std::sqrt(std::max(w2, 0.0)) * s;
    const bool at_pole = w2 > 0.0 && std::fabs(std::sin(phase)) <= kPoleGuard * std::max(1.0, phase);
    return {minus, closed_log_slope(p.lambda_plus * p.lambda_plus, s), at_pole};
  }
  const auto x = RadialPoint::from_half_radius(s);
  const auto gm = specfun::evaluate_G(Branch::Minus, p, x);
  const auto gp = specfun::evaluate_G(Branch::Plus, p, x);
  const bool at_pole = std::fabs(gm.value) <= kPoleGuard * std::fabs(gm.slope) * s;
  return {gm.slope / gm.value, gp.slope / gp.value, at_pole};
}

int minus_sign(int n, double mu, double s) {
  if (n == 3) {
    const double v = std::sin(2.0 * mu * s);
    return (v > 0.0) - (v < 0.0);
  }
  const auto p = HyperParams::from_excess_frequency(n, 1.0, mu);
  const auto g = specfun::evaluate_G(Branch::Minus, p, RadialPoint::from_half_radius(s));
  return (g.value > 0.0) - (g.value < 0.0);
}

std::vector<double> pole_ladder_mu(int n, int count, double s) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (!(s > 0.0)) throw DomainError("pole ladder needs a positive radius");
  if (count < 1) throw DomainError("pole index must be at least 1");
  std::vector<double> out;
  if (n == 3) {
    for (int k = 1; k <= count; ++k) out.push_back(k * kPi / (2.0 * s));
    return out;
  }
  // Zeros are spaced roughly π/(2s) apart; sample 16 points per spacing.
  const double step = kPi / (32.0 * s);
  const long cap = 64L * (count + 4);
  double prev_mu = 0.0;
  int prev = minus_sign(n, 0.0, s);
  for (long i = 1; i <= cap && int(out.size()) < count; ++i) {
    const double mu = i * step;
    const int cur = minus_sign(n, mu, s);
    if (cur != prev && cur != 0) {
      double lo = prev_mu, hi = mu;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (minus_sign(n, mid, s) == prev)
          lo = mid;
        else
          hi = mid;
      }
      out.push_back(0.5 * (lo + hi));
      prev = cur;
    }
    prev_mu = mu;
  }
  if (int(out.size()) < count)
    throw SolverError("pole scan window exhausted before reaching the requested zero");
  return out;
}

double lambda_of_mu(int n, double kappa, double mu) {
  return kappa * std::hypot(0.5 * (n - 1), mu);
}

double excess_of_mu(int n, double kappa, double mu) {
  const double h = 0.5 * (n - 1);
  return kappa * mu * mu / (std::hypot(h, mu) + h);
}

}  // namespace detail

double log_slope_gap(int n, double mu, double s) {
  const auto d = detail::log_slopes(HyperParams::from_excess_frequency(n, 1.0, mu), s);
  return d.minus - d.plus;
}

double K_nu(const SpaceForm& sf, double lambda, double t) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  if (!(t > 0.0)) throw DomainError("t must be positive");
  const double nu = sf.nu();
  if (sf.kappa == 0.0) {
    const double x = lambda * t;
    const auto [j0, i0] = specfun::bessel_pair(nu, x);
    const auto [j1, i1] = specfun::bessel_pair(nu + 1.0, x);
    if (std::fabs(j0) <= kPoleGuard * std::max(1.0, x) * std::fabs(j1)) {
      double best = specfun::bessel_zero(nu, 1);
      for (int k = 2; k < 1000 && best < x; ++k) {
        const double z = specfun::bessel_zero(nu, k);
        if (std::fabs(z - x) < std::fabs(best - x)) best = z;
        if (z > x) break;
      }
      throw PoleError("K evaluated at a zero of J_nu", best / t);
    }
    return -lambda * (j1 * i0 + i1 * j0) / (j0 * i0);
  }
  const auto p = HyperParams::from_lambda(sf.n, lambda, sf.kappa);
  const double s = RadialPoint::from_tilde(t).half_radius();
  const auto d = detail::log_slopes(p, s);
  const double gap = d.minus - d.plus;
  if (d.at_pole || !std::isfinite(gap))
    throw PoleError("K evaluated at a zero of G_minus", nearest_pole(sf, lambda, t));
  return gap / std::sinh(2.0 * s);
}

double K0_ratio_form(double kappa, double lambda, double t) {
  if (!(kappa > 0.0)) throw DomainError("curvature scale must be positive");
  if (!(lambda > 0.0) || !(t > 0.0)) throw DomainError("lambda and t must be positive");
  const double q = 4.0 * (lambda / kappa) * (lambda / kappa);
  const double z = t / (1.0 + t);
  auto ratio = [&](std::complex<double> lam) {
    const auto a = 0.5 * (1.0 + lam);
    const auto num = complex_series(a, 0.5 * (3.0 + lam), 2.0, z);
    const auto den = complex_series(a, a, 1.0, z);
    return num / den;
  };
  const auto r_plus = ratio(std::sqrt(std::complex<double>(1.0 + q, 0.0)));
  const auto r_minus = ratio(std::sqrt(std::complex<double>(1.0 - q, 0.0)));
  return -(lambda * lambda) / (kappa * kappa * (1.0 + t)) * (r_plus + r_minus).real();
}

double pole_mu(int n, int k, double s) { return detail::pole_ladder_mu(n, k, s).back(); }

double pole_g(const SpaceForm& sf, int k, double t) {
  if (!(sf.kappa > 0.0)) throw DomainError("pole ladder needs positive curvature scale");
  if (!(t > 0.0)) throw DomainError("t must be positive");
  if (k < 1) throw DomainError("pole index must be at least 1");
  const double s = RadialPoint::from_tilde(t).half_radius();
  return detail::lambda_of_mu(sf.n, sf.kappa, pole_mu(sf.n, k, s));
}

}  // namespace hyperplate::tones
