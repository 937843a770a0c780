#include "hyperplate/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "hyperplate/errors.hpp"

namespace hyperplate::specfun {

namespace {

constexpr long kTermCap = 100000;
constexpr double kSeriesTol = 1e-15;
constexpr double kLn2 = 0.69314718055994530942;

// Direct series is used while ω√t stays below this and t ≤ ½.
constexpr double kSeriesPhase = 2.5;
constexpr double kSeriesTilde = 0.5;

struct SeriesValue {
  double g;
  double gt;  // d/dt
};

SeriesValue sum_series(double lambda_sq, double c, double t) {
  const double ab = 0.25 - 0.25 * lambda_sq;
  if (t == 0.0) return {1.0, -ab / c};
  double term = 1.0, sum = 1.0, dsum = 0.0;
  for (long k = 0; k < kTermCap; ++k) {
    const double kh = k + 0.5;
    const double ratio = -(kh * kh - 0.25 * lambda_sq) / ((c + k) * (k + 1.0)) * t;
    term *= ratio;
    sum += term;
    dsum += (k + 1.0) * term;
    if (!std::isfinite(sum))
      throw EvaluationError("hypergeometric series overflow", sum, term, k + 1);
    if (term == 0.0) return {sum, dsum / t};
    if (std::fabs(ratio) < 1.0 && std::fabs(term) <= kSeriesTol * std::fabs(sum) &&
        std::fabs((k + 1.0) * term) <= kSeriesTol * std::fabs(dsum))
      return {sum, dsum / t};
  }
  throw EvaluationError("hypergeometric series did not converge", sum, term, kTermCap);
}

double series_edge(double lambda_sq) {
  const double omega = 0.5 * std::sqrt(std::fabs(lambda_sq));
  double t0 = kSeriesTilde;
  if (omega * std::sqrt(t0) > kSeriesPhase) t0 = (kSeriesPhase / omega) * (kSeriesPhase / omega);
  return std::asinh(std::sqrt(t0));
}

// sinh(s) and cosh(s) sharing one exponent
struct ScaledHyperbolic {
  double sh, ch, log_scale;
};

ScaledHyperbolic scaled_sinh_cosh(double s) {
  if (s < 20.0) return {std::sinh(s), std::cosh(s), 0.0};
  const double e = std::exp(-2.0 * s);
  return {-std::expm1(-2.0 * s), 1.0 + e, s - kLn2};
}

HyperSample closed_form_3d(double lambda_sq, double s) {
  if (s == 0.0) return {};
  // S = sinh(Λs)/Λ, sin(ωs)/ω or s depending on the sign of Λ²
  double sv, sd, sl = 0.0;
  const double x2 = lambda_sq * s * s;
  if (std::fabs(x2) < 1e-8) {
    sv = s * (1.0 + x2 / 6.0);
    sd = 1.0 + 0.5 * x2;
  } else if (lambda_sq > 0.0) {
    const double lam = std::sqrt(lambda_sq);
    const double x = lam * s;
    if (x < 20.0) {
      sv = std::sinh(x) / lam;
      sd = std::cosh(x);
    } else {
      sv = -std::expm1(-2.0 * x) / (2.0 * lam);
      sd = 0.5 * (1.0 + std::exp(-2.0 * x));
      sl = x;
    }
  } else {
    const double w = std::sqrt(-lambda_sq);
    sv = std::sin(w * s) / w;
    sd = std::cos(w * s);
  }
  const auto h = scaled_sinh_cosh(s);
  HyperSample out;
  out.value = sv / h.sh;
  out.slope = (sd * h.sh - sv * h.ch) / (h.sh * h.sh);
  out.log_scale = sl - h.log_scale;
  return out;
}

using State = std::array<double, 2>;

struct RadialOde {
  double lambda_sq;
  int n;
  void operator()(const State& x, State& dxds, double s) const {
    const double p = 2.0 / std::tanh(2.0 * s) + 2.0 * (n - 2) / std::sinh(2.0 * s);
    dxds[0] = x[1];
    dxds[1] = -p * x[1] - (1.0 - lambda_sq) * x[0];
  }
};

// Integrates the radial equation in s carrying a running exponent.
class Continuation {
public:
  Continuation(double lambda_sq, int n, double s0, const HyperSample& start)
      : ode_{lambda_sq, n}, s_(s0), log_scale_(start.log_scale) {
    x_ = {start.value, start.slope};
    const double freq = std::sqrt(std::fabs(lambda_sq)) + 1.0;
    dt_ = std::min(0.05, 0.2 / freq);
    renormalize();
  }

  HyperSample advance_to(double target) {
    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(1e-15, 1e-14);
    long tries = 0;
    while (s_ < target) {
      double dt = std::min(dt_, target - s_);
      const bool clipped = dt < dt_;
      const auto res = stepper.try_step(ode_, x_, s_, dt);
      if (++tries > kStepCap)
        throw EvaluationError("radial ODE continuation exceeded step cap", x_[0], x_[1], tries);
      if (res == odeint::success) {
        if (!clipped || dt > dt_) dt_ = dt;
        if (target - s_ < 1e-14 * std::max(1.0, target)) s_ = target;
        renormalize();
      } else {
        dt_ = dt;
      }
      if (!std::isfinite(x_[0]) || !std::isfinite(x_[1]))
        throw EvaluationError("radial ODE continuation produced non-finite state", x_[0], x_[1],
                              tries);
    }
    return {x_[0], x_[1], log_scale_};
  }

private:
  static constexpr long kStepCap = 2000000;

  void renormalize() {
    const double m = std::max(std::fabs(x_[0]), std::fabs(x_[1]));
    if (m == 0.0 || !std::isfinite(m)) return;
    if (m > 1e4 || m < 1e-4) {
      x_[0] /= m;
      x_[1] /= m;
      log_scale_ += std::log(m);
    }
  }

  RadialOde ode_;
  double s_;
  double log_scale_;
  State x_{};
  double dt_;
};

HyperSample series_sample(double lambda_sq, double c, double s) {
  const double sh = std::sinh(s);
  const double t = sh * sh;
  const auto sv = sum_series(lambda_sq, c, t);
  return {sv.g, sv.gt * std::sinh(2.0 * s), 0.0};
}

void check_params(const HyperParams& p) {
  if (p.n < 2) throw DomainError("dimension must be at least 2");
  if (!std::isfinite(p.lambda_plus) || !std::isfinite(p.lambda_minus_sq))
    throw DomainError("hypergeometric parameters must be finite");
}

bool use_closed_form(const HyperParams& p, Method m, double s, double edge) {
  if (m == Method::ClosedForm) {
    if (p.n != 3) throw DomainError("closed forms exist only for n = 3");
    return true;
  }
  if (m == Method::Series) return false;
  return p.n == 3 && s > edge;
}

}  // namespace

RadialPoint RadialPoint::from_tilde(double t) {
  if (!(t >= 0.0)) throw DomainError("tilde coordinate must be non-negative");
  return RadialPoint(std::asinh(std::sqrt(t)));
}

RadialPoint RadialPoint::from_half_radius(double s) {
  if (!(s >= 0.0)) throw DomainError("half radius must be non-negative");
  return RadialPoint(s);
}

double RadialPoint::tilde() const noexcept {
  const double sh = std::sinh(s_);
  return sh * sh;
}

HyperParams HyperParams::from_lambda(int n, double lambda, double kappa) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (!(kappa > 0.0)) throw DomainError("curvature scale must be positive");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  HyperParams p;
  p.n = n;
  p.lambda = lambda;
  p.kappa = kappa;
  const double q = 4.0 * (lambda / kappa) * (lambda / kappa);
  const double m = double(n - 1) * (n - 1);
  p.lambda_plus = std::sqrt(m + q);
  p.lambda_minus_sq = m - q;
  return p;
}

HyperParams HyperParams::from_excess_frequency(int n, double kappa, double mu) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (!(kappa > 0.0)) throw DomainError("curvature scale must be positive");
  if (!(mu >= 0.0)) throw DomainError("excess frequency must be non-negative");
  HyperParams p;
  p.n = n;
  p.kappa = kappa;
  const double h = 0.5 * (n - 1);
  p.lambda = kappa * std::hypot(h, mu);
  p.lambda_minus_sq = -4.0 * mu * mu;
  p.lambda_plus = 2.0 * std::hypot(std::sqrt(2.0) * h, mu);
  return p;
}

double HyperSample::unscaled_value() const { return value * std::exp(log_scale); }

double direct_series(double lambda_sq, double c, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("direct series needs 0 <= t < 1");
  return sum_series(lambda_sq, c, t).g;
}

HyperSample evaluate_G(Branch b, const HyperParams& p, RadialPoint x, Method m) {
  check_params(p);
  const double lsq = p.lambda_sq(b);
  const double s = x.half_radius();
  const double edge = series_edge(lsq);
  if (use_closed_form(p, m, s, edge)) return closed_form_3d(lsq, s);
  if (s <= edge) return series_sample(lsq, p.c(), s);
  Continuation ode(lsq, p.n, edge, series_sample(lsq, p.c(), edge));
  return ode.advance_to(s);
}

std::vector<HyperSample> sample_G(Branch b, const HyperParams& p,
                                  const std::vector<RadialPoint>& ascending, Method m) {
  check_params(p);
  const double lsq = p.lambda_sq(b);
  const double edge = series_edge(lsq);
  std::vector<HyperSample> out;
  out.reserve(ascending.size());
  std::optional<Continuation> ode;
  double last = 0.0;
  for (const auto& x : ascending) {
    const double s = x.half_radius();
    if (s < last) throw DomainError("sample points must be ascending");
    last = s;
    if (use_closed_form(p, m, s, edge)) {
      out.push_back(closed_form_3d(lsq, s));
    } else if (s <= edge) {
      out.push_back(series_sample(lsq, p.c(), s));
    } else {
      if (!ode) ode.emplace(lsq, p.n, edge, series_sample(lsq, p.c(), edge));
      out.push_back(ode->advance_to(s));
    }
  }
  return out;
}

double hyper_G(Branch b, const HyperParams& p, double t, Method m) {
  const auto x = RadialPoint::from_tilde(t);
  const auto g = evaluate_G(b, p, x, m);
  const double v = g.unscaled_value();
  if (!std::isfinite(v))
    throw EvaluationError("hypergeometric value overflows double at t = " + std::to_string(t),
                          g.value, g.log_scale, 0);
  return v;
}

double hyper_G_prime(Branch b, const HyperParams& p, double t, Method m) {
  check_params(p);
  const auto x = RadialPoint::from_tilde(t);
  const double lsq = p.lambda_sq(b);
  const double s = x.half_radius();
  const double edge = series_edge(lsq);
  if (!use_closed_form(p, m, s, edge) && s <= edge) return sum_series(lsq, p.c(), t).gt;
  const auto g = evaluate_G(b, p, x, m);
  const double v = g.slope / std::sinh(2.0 * s) * std::exp(g.log_scale);
  if (!std::isfinite(v))
    throw EvaluationError("hypergeometric derivative overflows double", g.slope, g.log_scale, 0);
  return v;
}

}  // namespace hyperplate::specfun
