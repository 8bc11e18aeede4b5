#include <cmath>
#include <random>

#include "doctest.h"
#include "motionwalk/catalog.hpp"
#include "motionwalk/representations.hpp"
#include "motionwalk/spectral.hpp"
#include "suite.hpp"

using namespace motionwalk;

TEST_CASE("spectral radius examples") {
  Eigen::Matrix2cd nil;
  nil << 0, 3, 0, 0;
  CHECK(spectral_radius(nil) == doctest::Approx(0.0));
  Eigen::Matrix2cd d;
  d << 0.5, 0, 0, Complex(0, 0.3);
  CHECK(std::abs(spectral_radius(d) - 0.5) < 1e-12);
  // Companion matrix of t^2 - 4t - 1.
  Eigen::Matrix2d companion;
  companion << 0, 1, 1, 4;
  CHECK(std::abs(spectral_radius(companion) - (2 + std::sqrt(5.0))) < 1e-9);
  CHECK(spectral_radius(Eigen::MatrixXcd(0, 0)) == 0.0);
}

TEST_CASE("radius is bounded by the norm, with equality for Hermitian input") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + trial % 7;
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = Complex(n01(rng), n01(rng));
    CHECK(spectral_radius(m) <= op_norm(m) * (1 + 1e-12));
    const Eigen::MatrixXcd h = m + m.adjoint();
    CHECK(std::abs(spectral_radius(h) - op_norm(h)) < 1e-9 * op_norm(h));
  }
}

TEST_CASE("one in spectrum") {
  const auto id = one_in_spectrum(Eigen::MatrixXcd::Identity(3, 3));
  CHECK(id.verdict);
  CHECK(id.margin == 0.0);
  const auto zero = one_in_spectrum(Eigen::MatrixXcd::Zero(3, 3));
  CHECK_FALSE(zero.verdict);
  CHECK(std::abs(zero.margin - 1.0) < 1e-15);
  const auto empty = one_in_spectrum(Eigen::MatrixXcd(0, 0));
  CHECK_FALSE(empty.verdict);
  CHECK(std::isinf(empty.margin));

  // Probability measures fix the constants in Lambda_0.
  std::mt19937_64 rng(43);
  const auto g = catalog::unit_group(9, 2, 6);
  const auto mu = testing::random_probability(g, rng, 5);
  CHECK(one_in_spectrum(fourier(mu, Character{{0}}).matrix).verdict);
}

TEST_CASE("Gelfand radius") {
  const auto g = catalog::order10_group();
  CHECK(std::abs(gelfand_radius(GroupMeasure::point_mass(g, 7)).radius - 1.0) < 1e-12);
  std::mt19937_64 rng(47);
  CHECK(std::abs(gelfand_radius(testing::random_probability(g, rng, 3)).radius - 1.0) < 1e-12);

  const auto z2 = catalog::abelian_group(2);
  const auto diff = GroupMeasure::point_mass(z2, 1) - GroupMeasure::point_mass(z2, 0);
  CHECK(std::abs(gelfand_radius(diff).radius - 2.0) < 1e-12);
  // Oracle: direct powers.
  CHECK(std::abs(std::pow(tv_norm(convolution_power(diff, 50)), 1.0 / 50) - 2.0) < 1e-12);
}

TEST_CASE("Gelfand estimates are non-increasing upper bounds") {
  std::mt19937_64 rng(53);
  for (const auto& ng : testing::group_catalog(64)) {
    CAPTURE(ng.name);
    const auto mu = testing::random_complex(ng.group, rng);
    const auto est = gelfand_radius(mu);
    for (std::size_t i = 1; i < est.history.size(); ++i) {
      CHECK(est.history[i] <= est.history[i - 1] * (1 + 1e-12));
    }
    double sup = 0.0;
    for (const auto& b : block_spectra(mu)) sup = std::max(sup, b.spectral_radius);
    CHECK(est.radius >= sup - 1e-9);
  }
}

TEST_CASE("block radius is consistent with powers") {
  std::mt19937_64 rng(59);
  const auto g = catalog::unit_group(7, 3, 6);
  const auto mu = testing::random_complex(g, rng);
  const auto mu3 = convolution_power(mu, 3);
  for (const auto& orbit : dual_orbits(g)) {
    const double r = spectral_radius(fourier(mu, orbit.representative).matrix);
    const double r3 = spectral_radius(fourier(mu3, orbit.representative).matrix);
    CHECK(std::abs(r * r * r - r3) < 1e-9 * std::max(1.0, r3));
  }
}

TEST_CASE("star norm") {
  const auto g = catalog::unit_group(13, 3, 3);
  CHECK(std::abs(star_norm(GroupMeasure::point_mass(g, 5)) - 1.0) < 1e-12);
  CHECK(std::abs(star_norm(GroupMeasure::uniform(g)) - 1.0) < 1e-12);
  std::mt19937_64 rng(61);
  for (int i = 0; i < 10; ++i) {
    const auto mu = testing::random_complex(g, rng);
    CHECK(star_norm(mu) <= tv_norm(mu) * (1 + 1e-12));
  }
}

TEST_CASE("spectral radius formula") {
  const auto g = catalog::order10_group();
  const auto e = verify_srf(GroupMeasure::point_mass(g, 0));
  CHECK(e.pass);
  CHECK(std::abs(e.gelfand_radius_estimate - 1.0) < 1e-12);
  CHECK(std::abs(e.sup_radius - 1.0) < 1e-12);
  CHECK(e.singular_term == 0.0);
  CHECK(e.singular_reason == "discrete Haar: all measures absolutely continuous");

  const auto z2 = catalog::abelian_group(2);
  const auto r = verify_srf(GroupMeasure::point_mass(z2, 1) - GroupMeasure::point_mass(z2, 0));
  CHECK(r.pass);
  CHECK(std::abs(r.gelfand_radius_estimate - 2.0) < 1e-9);
  CHECK(std::abs(r.sup_radius - 2.0) < 1e-9);

  std::mt19937_64 rng(67);
  for (const auto& ng : testing::group_catalog(64)) {
    CAPTURE(ng.name);
    const auto rep = verify_srf(testing::random_complex(ng.group, rng));
    CHECK(rep.formula_gap <= 1e-6);
    CHECK(rep.pass);
  }
}
