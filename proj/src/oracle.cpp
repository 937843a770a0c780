#include "hyperplate/oracle.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "hyperplate/errors.hpp"

namespace hyperplate::oracle {

namespace {

constexpr int kIterationCap = 10000;
constexpr double kTolerance = 1e-10;

double warp(const SpaceForm& sf, double rho) {
  return sf.kappa == 0.0 ? rho : std::sinh(sf.kappa * rho) / sf.kappa;
}

double measure(const SpaceForm& sf, double rho) { return std::pow(warp(sf, rho), sf.n - 1); }

// ∫_a^b s_κ(ρ)^{n−1} dρ
double shell(const SpaceForm& sf, double a, double b) {
  const double c = sf.n * geometry::unit_ball_volume(sf.n);
  return (geometry::ball_volume(sf, b) - geometry::ball_volume(sf, a)) / c;
}

void check(const SpaceForm& sf, double L, const RadialGrid& grid) {
  if (sf.n < 2) throw DomainError("dimension must be at least 2");
  if (!(L > 0.0)) throw DomainError("radius must be positive");
  if (grid.n_points < 16) throw DomainError("grid needs at least 16 points");
  if (std::fabs(grid.radius - L) > 1e-14 * L) throw DomainError("grid radius does not match L");
}

// Generalized problem B x = λ M x, M diagonal, by inverse iteration.
IterationReport inverse_iteration(const Eigen::MatrixXd& B, const Eigen::VectorXd& mass) {
  const Eigen::LLT<Eigen::MatrixXd> llt(B);
  if (llt.info() != Eigen::Success) throw SolverError("discrete operator is not positive definite");
  Eigen::VectorXd x = Eigen::VectorXd::Ones(B.rows());
  x /= std::sqrt(x.dot(mass.cwiseProduct(x)));
  double prev = 0.0;
  for (int it = 1; it <= kIterationCap; ++it) {
    // x is M-normalized, so 1/(xᵀMy) is the Rayleigh quotient of y
    Eigen::VectorXd y = llt.solve(mass.cwiseProduct(x));
    const double rq = 1.0 / x.dot(mass.cwiseProduct(y));
    x = y / std::sqrt(y.dot(mass.cwiseProduct(y)));
    if (it > 1 && std::fabs(rq - prev) <= kTolerance * std::fabs(rq)) return {rq, it};
    prev = rq;
  }
  throw SolverError("inverse iteration did not converge");
}

}  // namespace

RadialGrid RadialGrid::make(const SpaceForm& sf, double L, int n_points) {
  if (n_points < 16) throw DomainError("grid needs at least 16 points");
  if (!(L > 0.0)) throw DomainError("radius must be positive");
  RadialGrid g;
  g.n_points = n_points;
  g.radius = L;
  g.spacing = L / n_points;
  g.weight.resize(n_points + 1);
  for (int i = 0; i <= n_points; ++i) g.weight[i] = measure(sf, i * g.spacing);
  return g;
}

IterationReport fd_plate_solve(const SpaceForm& sf, double L, const RadialGrid& grid) {
  check(sf, L, grid);
  const int N = grid.n_points;
  const double h = grid.spacing;
  // Laplacian rows at nodes 0..N acting on unknowns v_0..v_{N−1}; v_N = 0 and
  // the ghost v_{N+1} = v_{N−1} carries v'(L) = 0.
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(N + 1, N);
  Eigen::VectorXd quad(N + 1);
  for (int i = 0; i <= N; ++i) {
    const double rho = i * h;
    const double cell = i == 0   ? shell(sf, 0.0, 0.5 * h)
                        : i == N ? h * grid.weight[N]
                                 : shell(sf, rho - 0.5 * h, rho + 0.5 * h);
    quad[i] = i == N ? shell(sf, L - 0.5 * h, L) : cell;
    const double right = measure(sf, rho + 0.5 * h) / (h * cell);
    const double left = i == 0 ? 0.0 : measure(sf, rho - 0.5 * h) / (h * cell);
    auto add = [&](int j, double c) {
      if (j == N) return;
      if (j == N + 1) j = N - 1;
      lap(i, j) += c;
    };
    add(i + 1, right);
    add(i, -right - left);
    if (i > 0) add(i - 1, left);
  }
  const Eigen::MatrixXd B = lap.transpose() * quad.asDiagonal() * lap;
  return inverse_iteration(B, quad.head(N));
}

double fd_plate_tone(const SpaceForm& sf, double L, const RadialGrid& grid) {
  return fd_plate_solve(sf, L, grid).eigenvalue;
}

IterationReport fd_membrane_solve(const SpaceForm& sf, double L, const RadialGrid& grid) {
  check(sf, L, grid);
  const int N = grid.n_points;
  const double h = grid.spacing;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N, N);
  Eigen::VectorXd mass(N);
  for (int i = 0; i < N; ++i) {
    const double rho = i * h;
    mass[i] = i == 0 ? shell(sf, 0.0, 0.5 * h) : shell(sf, rho - 0.5 * h, rho + 0.5 * h);
    const double flux = measure(sf, rho + 0.5 * h) / h;
    K(i, i) += flux;
    if (i + 1 < N) {
      K(i + 1, i + 1) += flux;
      K(i, i + 1) -= flux;
      K(i + 1, i) -= flux;
    }
  }
  return inverse_iteration(K, mass);
}

double fd_membrane_tone(const SpaceForm& sf, double L, const RadialGrid& grid) {
  return fd_membrane_solve(sf, L, grid).eigenvalue;
}

}  // namespace hyperplate::oracle
