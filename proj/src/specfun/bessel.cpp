#include "hyperplate/specfun.hpp"

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "hyperplate/errors.hpp"

namespace hyperplate::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_order(double nu) {
  const double twice = 2.0 * nu;
  if (!(nu >= 0.0 && nu <= 40.0) || twice != std::floor(twice))
    throw DomainError("Bessel order must be a half-integer in [0, 40]");
}

}  // namespace

std::pair<double, double> bessel_pair(double nu, double x) {
  check_order(nu);
  if (!(x > 0.0)) throw DomainError("Bessel argument must be positive");
  if (nu == 0.5) {
    const double f = std::sqrt(2.0 / (kPi * x));
    return {f * std::sin(x), f * std::sinh(x)};
  }
  return {boost::math::cyl_bessel_j(nu, x), boost::math::cyl_bessel_i(nu, x)};
}

double bessel_zero(double nu, int k) {
  check_order(nu);
  if (k < 1) throw DomainError("zero index must be at least 1");
  if (nu == 0.5) return k * kPi;
  return boost::math::cyl_bessel_j_zero(nu, k);
}

double bessel_cross_product(double nu, double x) {
  const auto [j0, i0] = bessel_pair(nu, x);
  const auto [j1, i1] = bessel_pair(nu + 1.0, x);
  return j0 * i1 + i0 * j1;
}

double cross_product_root(double nu) {
  check_order(nu);
  if (nu + 1.0 > 40.0) throw DomainError("Bessel order too large for the cross product");
  // J_ν and J_{ν+1} are positive before j_{ν,1}, and the sign flips inside
  // (j_{ν,1}, j_{ν+1,1}).
  double lo = bessel_zero(nu, 1);
  double hi = bessel_zero(nu + 1.0, 1);
  double flo = bessel_cross_product(nu, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = bessel_cross_product(nu, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace hyperplate::specfun
