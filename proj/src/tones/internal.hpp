#pragma once

#include <vector>

#include "hyperplate/specfun.hpp"

namespace hyperplate::tones::detail {

struct LogSlopes {
  double minus;  ///< d/ds ln 𝒢₋
  double plus;   ///< d/ds ln 𝒢₊
  bool at_pole;
};

LogSlopes log_slopes(const specfun::HyperParams& p, double s);

/// sign of 𝒢₋ at excess frequency μ (κ = 1) and half radius s
int minus_sign(int n, double mu, double s);

/// first `count` zeros in μ of 𝒢₋(·, s)
std::vector<double> pole_ladder_mu(int n, int count, double s);

double lambda_of_mu(int n, double kappa, double mu);
double excess_of_mu(int n, double kappa, double mu);

}  // namespace hyperplate::tones::detail
