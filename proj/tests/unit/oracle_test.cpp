#include <cmath>

#include <gtest/gtest.h>

#include "hyperplate/errors.hpp"
#include "hyperplate/oracle.hpp"
#include "hyperplate/tones.hpp"

using namespace hyperplate;
using namespace hyperplate::oracle;

namespace {

double plate(const SpaceForm& sf, double L, int N) {
  return fd_plate_tone(sf, L, RadialGrid::make(sf, L, N));
}

double membrane(const SpaceForm& sf, double L, int N) {
  return fd_membrane_tone(sf, L, RadialGrid::make(sf, L, N));
}

}  // namespace

TEST(Grid, Layout) {
  const SpaceForm sf(3, 1.0);
  const auto g = RadialGrid::make(sf, 2.0, 64);
  EXPECT_EQ(g.weight.size(), 65u);
  EXPECT_DOUBLE_EQ(g.spacing, 2.0 / 64);
  EXPECT_EQ(g.weight[0], 0.0);
  for (int i = 1; i <= 64; ++i) EXPECT_GT(g.weight[i], 0.0);
  EXPECT_THROW(RadialGrid::make(sf, 2.0, 8), DomainError);
  EXPECT_THROW(fd_plate_tone(sf, 1.0, g), DomainError);
}

TEST(Plate, EuclideanDisc) {
  const double h = specfun::cross_product_root(0.0);
  EXPECT_LT(std::fabs(plate({2, 0.0}, 1.0, 512) / std::pow(h, 4) - 1), 5e-3);
}

TEST(Plate, TableOneRow) {
  EXPECT_LT(std::fabs(plate({3, 1.0}, 0.7, 512) / std::pow(5.6761, 4) - 1), 1e-2);
}

TEST(Plate, SecondOrderConvergence) {
  for (int n : {2, 3}) {
    const SpaceForm sf(n, 1.0);
    const double ref = tones::fundamental_tone(sf, 0.7).gamma;
    const double e1 = std::fabs(plate(sf, 0.7, 128) - ref);
    const double e2 = std::fabs(plate(sf, 0.7, 256) - ref);
    const double e3 = std::fabs(plate(sf, 0.7, 512) - ref);
    EXPECT_GE(std::log2(e1 / e2), 1.8);
    EXPECT_GE(std::log2(e2 / e3), 1.8);
  }
}

TEST(Plate, AboveMcKeanFloor) {
  for (int n : {2, 3})
    for (double L : {0.5, 3.0, 8.0}) {
      const SpaceForm sf(n, 1.0);
      EXPECT_GE(plate(sf, L, 256), 0.98 * tones::mckean_floor(sf));
    }
}

TEST(Plate, DominatesSquaredMembrane) {
  for (int n : {2, 3})
    for (double L : {0.3, 1.0, 4.0}) {
      const SpaceForm sf(n, 1.0);
      const double m = membrane(sf, L, 256);
      EXPECT_GE(plate(sf, L, 256), 0.98 * m * m);
    }
}

TEST(Membrane, ThreeDimPole) {
  EXPECT_LT(std::fabs(membrane({3, 1.0}, 2.0, 512) / (1 + std::pow(M_PI / 2, 2)) - 1), 5e-3);
}

TEST(Membrane, EuclideanDisc) {
  const double j = specfun::bessel_first_zero(0.0);
  EXPECT_LT(std::fabs(membrane({2, 0.0}, 1.0, 512) / (j * j) - 1), 5e-3);
}

TEST(Membrane, TwoDimSmallRadius) {
  const double j = specfun::bessel_first_zero(0.0);
  const double expect = 1.0 / 3.0 + std::pow(j / 0.01, 2);
  EXPECT_LT(std::fabs(membrane({2, 1.0}, 0.01, 512) / expect - 1), 1e-2);
}

TEST(Membrane, MatchesPoleLadder) {
  for (int n : {2, 3}) {
    const SpaceForm sf(n, 1.0);
    const double g = tones::pole_g(sf, 1, geometry::tilde_of_radius(1.0, 1.5));
    EXPECT_LT(std::fabs(membrane(sf, 1.5, 512) / (g * g) - 1), 1e-4);
  }
}
