#include "hyperplate/specfun.hpp"

#include <cmath>

#include "hyperplate/errors.hpp"

namespace hyperplate::specfun {

namespace {

constexpr int kGridPoints = 10000;

HyperParams params_for_K(double K, int n) {
  if (!(K > 0.0)) throw DomainError("K must be positive");
  if (n < 2) throw DomainError("dimension must be at least 2");
  HyperParams p;
  p.n = n;
  p.kappa = 1.0;
  p.lambda = std::pow(K, 0.25);
  const double m = double(n - 1) * (n - 1);
  p.lambda_plus = std::sqrt(m + 4.0 * std::sqrt(K));
  p.lambda_minus_sq = m - 4.0 * std::sqrt(K);
  return p;
}

int sign_of(const HyperSample& g) { return (g.value > 0.0) - (g.value < 0.0); }

}  // namespace

double w_K(Branch b, double K, int n, double t) {
  return evaluate_G(b, params_for_K(K, n), RadialPoint::from_tilde(t), Method::Series)
      .unscaled_value();
}

OscillationVerdict classify_w_minus(double K, int n, double t_max) {
  if (!(t_max > 0.0)) throw DomainError("t_max must be positive");
  const auto p = params_for_K(K, n);
  const double t_lo = std::min(1e-6, 1e-6 * t_max);
  std::vector<RadialPoint> grid;
  grid.reserve(kGridPoints);
  const double step = std::log(t_max / t_lo) / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i)
    grid.push_back(RadialPoint::from_tilde(i + 1 == kGridPoints ? t_max : t_lo * std::exp(step * i)));
  const auto values = sample_G(Branch::Minus, p, grid, Method::Series);

  OscillationVerdict out;
  for (int i = 1; i < kGridPoints; ++i) {
    if (sign_of(values[i]) == sign_of(values[0]) && values[i].value != 0.0) continue;
    double lo = grid[i - 1].half_radius(), hi = grid[i].half_radius();
    for (int it = 0; it < 200 && values[i].value != 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const auto g = evaluate_G(Branch::Minus, p, RadialPoint::from_half_radius(mid), Method::Series);
      if (sign_of(g) == sign_of(values[0]))
        lo = mid;
      else
        hi = mid;
    }
    out.kind = OscillationKind::Oscillatory;
    out.first_sign_change = RadialPoint::from_half_radius(values[i].value == 0.0 ? hi : 0.5 * (lo + hi)).tilde();
    return out;
  }
  return out;
}

}  // namespace hyperplate::specfun
