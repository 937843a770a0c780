#pragma once

// Gaussian hypergeometric solutions 𝒢± of the radial clamped-plate equation
// on hyperbolic space, Bessel J/I of half-integer order, and the constants
// built from them (j_{ν,1}, 𝔥_ν).

#include <optional>
#include <utility>
#include <vector>

namespace hyperplate::specfun {

enum class Branch { Plus, Minus };

/// Position on the radial axis. Stored through the half radius s = κρ/2;
/// the hypergeometric argument is t = sinh²(s), which overflows long before s
/// does (ρ = 10⁵ is a legitimate input).
class RadialPoint {
public:
  static RadialPoint from_tilde(double t);
  static RadialPoint from_half_radius(double s);

  double half_radius() const noexcept { return s_; }
  /// sinh²(s); +inf once it overflows.
  double tilde() const noexcept;

private:
  explicit RadialPoint(double s) : s_(s) {}
  double s_;
};

/// Parameters of 𝒢±(ν, λ, ·). Both discriminants are stored squared, so the
/// conjugate case (Λ₋ imaginary) needs no complex arithmetic.
struct HyperParams {
  int n = 2;
  double lambda = 0.0;
  double kappa = 1.0;
  double lambda_plus = 0.0;      ///< Λ₊ = √((n−1)² + 4λ²/κ²)
  double lambda_minus_sq = 0.0;  ///< Λ₋² = (n−1)² − 4λ²/κ²

  static HyperParams from_lambda(int n, double lambda, double kappa);
  /// λ = κ√((n−1)²/4 + μ²); exact Λ₋² = −4μ² for μ ≥ 0.
  static HyperParams from_excess_frequency(int n, double kappa, double mu);

  double nu() const noexcept { return 0.5 * n - 1.0; }
  double c() const noexcept { return 0.5 * n; }
  double lambda_sq(Branch b) const noexcept {
    return b == Branch::Plus ? lambda_plus * lambda_plus : lambda_minus_sq;
  }
};

/// How 𝒢± gets evaluated. Auto picks closed forms for n = 3 and the series
/// (plus ODE continuation) otherwise; Series forces the generic path.
enum class Method { Auto, Series, ClosedForm };

/// 𝒢 = value·e^{log_scale}, d𝒢/ds = slope·e^{log_scale}.
struct HyperSample {
  double value = 1.0;
  double slope = 0.0;
  double log_scale = 0.0;

  double log_derivative() const { return slope / value; }
  double unscaled_value() const;
};

HyperSample evaluate_G(Branch b, const HyperParams& p, RadialPoint x, Method m = Method::Auto);

/// Samples along an ascending list of points; one ODE sweep serves all points
/// past the series region.
std::vector<HyperSample> sample_G(Branch b, const HyperParams& p,
                                  const std::vector<RadialPoint>& ascending,
                                  Method m = Method::Auto);

/// 𝒢±(ν, λ, t) = F((1∓Λ±)/2, (1+Λ±)/2; n/2; −t). Throws EvaluationError if the
/// value overflows or the series does not converge.
double hyper_G(Branch b, const HyperParams& p, double t, Method m = Method::Auto);

/// d/dt 𝒢±(ν, λ, t).
double hyper_G_prime(Branch b, const HyperParams& p, double t, Method m = Method::Auto);

/// Plain Gauss series Σ (a)_k(b)_k/((c)_k k!) (−t)^k for a + b = 1, so that
/// (a)_k(b)_k = ∏((j+½)² − Λ²/4). Converges for t < 1; exposed for testing.
double direct_series(double lambda_sq, double c, double t);

// --- Bessel -----------------------------------------------------------------

/// (J_ν(x), I_ν(x)) for ν = m/2, m = 0..80, x > 0.
std::pair<double, double> bessel_pair(double nu, double x);

/// k-th positive zero of J_ν.
double bessel_zero(double nu, int k);
inline double bessel_first_zero(double nu) { return bessel_zero(nu, 1); }

/// J_ν I_{ν+1} + I_ν J_{ν+1}; its first positive zero is 𝔥_ν.
double bessel_cross_product(double nu, double x);

/// 𝔥_ν, the first positive critical point of J_ν/I_ν.
double cross_product_root(double nu);

// --- oscillation of w^K_− -----------------------------------------------------

enum class OscillationKind { PositiveEverywhere, Oscillatory };

struct OscillationVerdict {
  OscillationKind kind = OscillationKind::PositiveEverywhere;
  std::optional<double> first_sign_change;
};

/// w^K_±(t) = F((1−Λ)/2, (1+Λ)/2; n/2; −t) with Λ² = (n−1)² ± 4√K.
double w_K(Branch b, double K, int n, double t);

/// Sign scan of w^K_− on a geometric grid of 10⁴ points over (0, t_max].
/// Sampling can only refute positivity: a PositiveEverywhere verdict for K just
/// above (n−1)⁴/16 means the first zero lies beyond t_max.
OscillationVerdict classify_w_minus(double K, int n, double t_max);

}  // namespace hyperplate::specfun
