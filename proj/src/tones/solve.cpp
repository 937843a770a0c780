#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hyperplate/errors.hpp"
#include "hyperplate/tones.hpp"
#include "internal.hpp"

namespace hyperplate::tones {

using specfun::HyperParams;
using specfun::RadialPoint;

namespace {

constexpr double kLn2 = 0.69314718055994530942;

struct Root {
  double x;
  double residual;
  int iterations;
};

// First root of a function decreasing from + to − across an open interval
// whose ends are poles. The ends are pulled inward until the signs settle.
Root solve_between_poles(const std::function<double(double)>& f, double lo, double hi) {
  const double width = hi - lo;
  double eps = 1e-9 * width;
  double a = 0, b = 0, fa = 0, fb = 0;
  bool ok = false;
  for (int tries = 0; tries < 40 && eps < 0.25 * width; ++tries, eps *= 2.0) {
    try {
      a = lo + eps;
      b = hi - eps;
      fa = f(a);
      fb = f(b);
      if (fa > 0.0 && fb < 0.0) {
        ok = true;
        break;
      }
    } catch (const EvaluationError&) {
    } catch (const PoleError&) {
    }
  }
  if (!ok) throw SolverError("could not establish a sign change between the poles");
  int it = 0;
  for (; it < 300; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, 0.0, it + 1};
    if (fm > 0.0) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  // one secant step inside the final bracket
  double x = fabs(fa) < fabs(fb) ? a : b;
  double fx = fabs(fa) < fabs(fb) ? fa : fb;
  if (fb != fa) {
    const double xs = a - fa * (b - a) / (fb - fa);
    if (xs > a && xs < b) {
      const double fs = f(xs);
      if (std::fabs(fs) < std::fabs(fx)) {
        x = xs;
        fx = fs;
      }
    }
  }
  return {x, std::fabs(fx), it + 1};
}

void require_plate_form(const SpaceForm& sf) {
  if (!(sf.kappa > 0.0)) throw DomainError("this operation needs positive curvature scale");
  if (sf.n != 2 && sf.n != 3)
    throw DomainError("transcendental tones are available for n = 2 and n = 3 only");
}

ToneMethod curved_method(int n) { return n == 3 ? ToneMethod::ClosedForm3D : ToneMethod::Series2D; }

// log of (sinh 2s)^{2ν+1} / 2^{2ν+2}
double log_weight(int n, double s) {
  const double x = 2.0 * s;
  const double ls = x < 20.0 ? std::log(std::sinh(x)) : x - kLn2 + std::log1p(-std::exp(-2.0 * x));
  return (n - 1) * ls - n * kLn2;
}

ToneResult finish(const SpaceForm& sf, const Root& r, double mu_lo, double mu_hi) {
  ToneResult out;
  out.lambda = detail::lambda_of_mu(sf.n, sf.kappa, r.x);
  out.gamma = std::pow(out.lambda, 4);
  out.bracket_lo = detail::lambda_of_mu(sf.n, sf.kappa, mu_lo);
  out.bracket_hi = detail::lambda_of_mu(sf.n, sf.kappa, mu_hi);
  out.residual = r.residual;
  out.iterations = r.iterations;
  out.method = curved_method(sf.n);
  out.excess = detail::excess_of_mu(sf.n, sf.kappa, r.x);
  return out;
}

ToneResult euclidean_tone(const SpaceForm& sf, double L) {
  const double nu = sf.nu();
  const double h = specfun::cross_product_root(nu);
  const auto [j0, i0] = specfun::bessel_pair(nu, h);
  const auto [j1, i1] = specfun::bessel_pair(nu + 1.0, h);
  ToneResult out;
  out.lambda = h / L;
  out.gamma = std::pow(h / L, 4);
  out.bracket_lo = specfun::bessel_zero(nu, 1) / L;
  out.bracket_hi = specfun::bessel_zero(nu, 2) / L;
  out.residual = std::fabs(j0 * i1 + i0 * j1) / (std::fabs(j0 * i1) + std::fabs(i0 * j1));
  out.method = ToneMethod::Euclidean;
  out.excess = out.lambda;
  return out;
}

}  // namespace

std::string to_string(ToneMethod m) {
  switch (m) {
    case ToneMethod::ClosedForm3D: return "ClosedForm3D";
    case ToneMethod::Series2D: return "Series2D";
    case ToneMethod::Euclidean: return "Euclidean";
    case ToneMethod::AsymptoticSmallL: return "AsymptoticSmallL";
    case ToneMethod::AsymptoticLargeL: return "AsymptoticLargeL";
  }
  return "unknown";
}

ToneResult fundamental_tone(const SpaceForm& sf, double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("radius must be positive and finite");
  if (sf.kappa == 0.0) return euclidean_tone(sf, L);
  require_plate_form(sf);
  const double s = 0.5 * sf.kappa * L;
  const auto poles = detail::pole_ladder_mu(sf.n, 2, s);
  auto f = [&](double mu) {
    const auto d = detail::log_slopes(HyperParams::from_excess_frequency(sf.n, 1.0, mu), s);
    return (d.minus - d.plus) / (std::fabs(d.minus) + std::fabs(d.plus));
  };
  return finish(sf, solve_between_poles(f, poles[0], poles[1]), poles[0], poles[1]);
}

ToneResult two_ball_tone(const SpaceForm& sf, const TwoBallConfig& cfg) {
  require_plate_form(sf);
  double alpha = cfg.alpha, beta = cfg.beta;
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw DomainError("tilde radii must be non-negative");
  if (alpha == 0.0 && beta == 0.0) throw DomainError("both balls are empty");
  if (alpha > beta) std::swap(alpha, beta);
  const double sb = RadialPoint::from_tilde(beta).half_radius();
  const auto beta_poles = detail::pole_ladder_mu(sf.n, 2, sb);

  if (alpha == beta) {
    const double g1 = detail::lambda_of_mu(sf.n, sf.kappa, beta_poles[0]);
    ToneResult out;
    out.lambda = g1;
    out.gamma = std::pow(g1, 4);
    out.bracket_lo = out.bracket_hi = g1;
    out.method = curved_method(sf.n);
    out.excess = detail::excess_of_mu(sf.n, sf.kappa, beta_poles[0]);
    return out;
  }

  const double sa = RadialPoint::from_tilde(alpha).half_radius();
  double hi = beta_poles[1];
  double log_wa = -std::numeric_limits<double>::infinity();
  if (alpha > 0.0) {
    hi = std::min(hi, detail::pole_ladder_mu(sf.n, 1, sa)[0]);
    log_wa = log_weight(sf.n, sa);
  }
  const double log_wb = log_weight(sf.n, sb);
  const double wa = std::exp(log_wa - log_wb);  // relative to the larger ball
  auto f = [&](double mu) {
    const auto p = HyperParams::from_excess_frequency(sf.n, 1.0, mu);
    const auto db = detail::log_slopes(p, sb);
    double num = db.minus - db.plus;
    double den = std::fabs(db.minus) + std::fabs(db.plus);
    if (wa > 0.0) {
      const auto da = detail::log_slopes(p, sa);
      num += wa * (da.minus - da.plus);
      den += wa * (std::fabs(da.minus) + std::fabs(da.plus));
    }
    return num / den;
  };
  return finish(sf, solve_between_poles(f, beta_poles[0], hi), beta_poles[0], hi);
}

}  // namespace hyperplate::tones
