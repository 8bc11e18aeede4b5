#include <algorithm>
#include <random>

#include <Eigen/LU>

#include "doctest.h"
#include "motionwalk/catalog.hpp"
#include "motionwalk/representations.hpp"
#include "motionwalk/spectral.hpp"
#include "suite.hpp"

using namespace motionwalk;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::vector<Character> all_characters(const MotionGroup& g) {
  std::vector<Character> out;
  for (std::size_t i = 0; i < g.a_order(); ++i) out.push_back(Character{g.a_coords(i)});
  return out;
}

}  // namespace

TEST_CASE("Lambda is a unitary representation") {
  for (const auto& ng : testing::group_catalog(100)) {
    CAPTURE(ng.name);
    const auto& g = ng.group;
    const int m = g.k_order();
    double hom = 0.0, unit = 0.0;
    for (const auto& orbit : dual_orbits(g)) {
      const Character& alpha = orbit.representative;
      std::vector<Eigen::MatrixXcd> lam(g.order());
      for (std::size_t x = 0; x < g.order(); ++x) {
        lam[x] = lambda_elem(g, alpha, g.element(x)).matrix;
        unit = std::max(unit, max_abs(lam[x].adjoint() * lam[x] - Eigen::MatrixXcd::Identity(m, m)));
      }
      for (std::size_t x = 0; x < g.order(); ++x) {
        for (std::size_t y = 0; y < g.order(); y += (g.order() > 50 ? 3 : 1)) {
          hom = std::max(hom, max_abs(lam[x] * lam[y] - lam[g.product(x, y)]));
        }
      }
      CHECK(max_abs(lam[0] - Eigen::MatrixXcd::Identity(m, m)) == 0.0);
    }
    CHECK(hom < 1e-13);
    CHECK(unit < 1e-12);
  }
}

TEST_CASE("Lambda_0 is left translation on K") {
  const auto g = catalog::unit_group(7, 2, 3);
  const Character zero{{0}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    const GElem e = g.element(x);
    CHECK(max_abs(lambda_elem(g, zero, e).matrix - left_regular_k(g, e.k)) == 0.0);
  }
}

TEST_CASE("Fourier transform basics") {
  std::mt19937_64 rng(17);
  for (const auto& ng : testing::group_catalog(100)) {
    CAPTURE(ng.name);
    const auto& g = ng.group;
    const int m = g.k_order();
    const auto mu = testing::random_complex(g, rng);
    const auto nu = testing::random_complex(g, rng);
    const auto conv = convolve(mu, nu);
    const auto u = GroupMeasure::uniform(g);
    const auto e = GroupMeasure::point_mass(g, 0);
    for (const auto& alpha : all_characters(g)) {
      CHECK(max_abs(fourier(e, alpha).matrix - Eigen::MatrixXcd::Identity(m, m)) == 0.0);
      if (!alpha.is_zero()) CHECK(max_abs(fourier(u, alpha).matrix) < 1e-15);
      const auto fm = fourier(mu, alpha).matrix;
      const auto fn = fourier(nu, alpha).matrix;
      // Reversed order for the transform, same order for U(mu).
      CHECK(max_abs(fourier(conv, alpha).matrix - fn * fm) < 1e-12 * tv_norm(mu) * tv_norm(nu));
      const auto rm = rep_of_measure(mu, alpha).matrix;
      const auto rn = rep_of_measure(nu, alpha).matrix;
      CHECK(max_abs(rep_of_measure(conv, alpha).matrix - rm * rn) < 1e-12 * tv_norm(mu) * tv_norm(nu));
      // mu-hat(U) = U(conj mu)^*
      CHECK(max_abs(fm - rep_of_measure(mu.conj(), alpha).matrix.adjoint()) < 1e-13);
      CHECK(op_norm(rm) <= tv_norm(mu) * (1 + 1e-12));
    }
  }
}

TEST_CASE("rep_of_measure of a point mass") {
  const auto g = catalog::order10_group();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto d = GroupMeasure::point_mass(g, x);
    CHECK(max_abs(rep_of_measure(d, Character{{2}}).matrix -
                  lambda_elem(g, Character{{2}}, g.element(x)).matrix) == 0.0);
  }
}

TEST_CASE("transform at 0 factors through push_k") {
  std::mt19937_64 rng(23);
  for (const auto& ng : testing::group_catalog(120)) {
    CAPTURE(ng.name);
    const auto& g = ng.group;
    CHECK(pik_consistency(testing::random_complex(g, rng)) < 1e-13);
    CHECK(pik_consistency(GroupMeasure::point_mass(g, g.order() - 1)) == 0.0);
    CHECK(pik_consistency(GroupMeasure::uniform(g)) < 1e-15);
  }
  // Uniform on G: the rank-one averaging operator.
  const auto g = catalog::unit_group(13, 3, 3);
  const auto f = fourier(GroupMeasure::uniform(g), Character{{0}}).matrix;
  CHECK(max_abs(f - Eigen::MatrixXcd::Constant(3, 3, 1.0 / 3)) < 1e-15);
}

TEST_CASE("orbit conjugation identity") {
  const auto g10 = catalog::order10_group();
  CHECK(orbit_conjugation_check(g10, Character{{1}}, 0) == 0.0);
  CHECK(orbit_conjugation_check(g10, Character{{1}}, 1) <= 1e-14);
  for (const auto& ng : testing::group_catalog(100)) {
    CAPTURE(ng.name);
    const auto& g = ng.group;
    double worst = 0.0;
    for (const auto& alpha : all_characters(g)) {
      for (int k = 0; k < g.k_order(); ++k) {
        worst = std::max(worst, orbit_conjugation_check(g, alpha, k));
      }
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("complement block of Lambda_0") {
  CHECK(constants_complement_basis(1).cols() == 0);
  const auto b = constants_complement_basis(5);
  CHECK(max_abs(b.adjoint() * b - Eigen::MatrixXcd::Identity(4, 4)) < 1e-15);
  CHECK(max_abs(b.adjoint() * Eigen::VectorXcd::Ones(5)) < 1e-15);

  const auto ab = catalog::abelian_group(7);
  CHECK(lambda0_complement_block(GroupMeasure::uniform(ab)).size() == 0);

  std::mt19937_64 rng(29);
  for (const auto& ng : testing::group_catalog(120)) {
    if (ng.group.k_order() == 1) continue;
    CAPTURE(ng.name);
    const auto& g = ng.group;
    CHECK(max_abs(lambda0_complement_block(GroupMeasure::uniform(g))) < 1e-15);

    // Spectrum of the block plus the eigenvalue on constants.
    const auto mu = testing::random_probability(g, rng, 4);
    Eigen::VectorXcd full = eigenvalues(fourier(mu, Character{Coords(g.rank(), 0)}).matrix);
    Eigen::VectorXcd part = eigenvalues(lambda0_complement_block(mu));
    std::vector<Complex> rest(full.begin(), full.end());
    std::vector<Complex> expected(part.begin(), part.end());
    expected.push_back(1.0);
    bool matched = true;
    for (const Complex& z : expected) {
      auto it = std::min_element(rest.begin(), rest.end(), [&](Complex p, Complex q) {
        return std::abs(p - z) < std::abs(q - z);
      });
      matched = matched && std::abs(*it - z) < 1e-8;
      rest.erase(it);
    }
    CHECK(matched);
  }
}

TEST_CASE("central measures act as scalars on every block") {
  for (const auto& ng : testing::group_catalog(100)) {
    CAPTURE(ng.name);
    const auto& g = ng.group;
    const auto orbits = dual_orbits(g);
    if (orbits.size() < 2) continue;
    std::vector<Character> s = orbits[1].members;
    if (orbits.size() > 3) s.insert(s.end(), orbits[3].members.begin(), orbits[3].members.end());
    const auto nu = central_measure(g, s);
    const int m = g.k_order();
    double worst = 0.0;
    for (const auto& alpha : all_characters(g)) {
      const double ind = std::count(s.begin(), s.end(), alpha) ? 1.0 : 0.0;
      worst = std::max(worst, max_abs(fourier(nu, alpha).matrix - ind * Eigen::MatrixXcd::Identity(m, m)));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("the family of transforms is injective") {
  std::mt19937_64 rng(31);
  for (const auto& ng : testing::group_catalog(60)) {
    CAPTURE(ng.name);
    const auto& g = ng.group;
    const auto chars = all_characters(g);
    const auto n = static_cast<Eigen::Index>(g.order());
    const int m = g.k_order();
    Eigen::MatrixXcd f(static_cast<Eigen::Index>(chars.size()) * m * m, n);
    for (Eigen::Index x = 0; x < n; ++x) {
      const auto delta = GroupMeasure::point_mass(g, static_cast<std::size_t>(x));
      for (std::size_t c = 0; c < chars.size(); ++c) {
        f.col(x).segment(static_cast<Eigen::Index>(c) * m * m, m * m) =
            fourier(delta, chars[c]).matrix.reshaped();
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(f);
    lu.setThreshold(1e-10);
    CHECK(lu.rank() == n);
  }
}
