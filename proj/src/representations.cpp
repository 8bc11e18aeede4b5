#include "motionwalk/representations.hpp"

#include <cmath>

namespace motionwalk {

namespace {

// Adds w * Lambda_alpha(x) into out; Lambda_alpha(x) is monomial with
// entry (k', k_x^-1 k') = <a_x, phi_{k'}(alpha)>.
void accumulate_lambda(const MotionGroup& g, std::size_t alpha_index,
                       std::size_t x, Complex w, Eigen::MatrixXcd& out) {
  const auto& kg = g.k_group();
  const int m = kg.order();
  const std::size_t a = x / static_cast<std::size_t>(m);
  const int kinv = kg.inv(static_cast<int>(x % static_cast<std::size_t>(m)));
  for (int kp = 0; kp < m; ++kp) {
    out(kp, kg.mul(kinv, kp)) += w * g.pairing(a, g.dual_act(kp, alpha_index));
  }
}

}  // namespace

RepMatrix lambda_elem(const MotionGroup& g, const Character& alpha,
                      const GElem& x) {
  const int m = g.k_order();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  accumulate_lambda(g, g.a_index(alpha.alpha), g.index_of(x), 1.0, out);
  return RepMatrix{alpha, std::move(out)};
}

FourierBlock fourier(const GroupMeasure& mu, const Character& alpha) {
  const auto& g = mu.group();
  const int m = g.k_order();
  const std::size_t ai = g.a_index(alpha.alpha);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Complex w = mu[x];
    if (w == Complex(0.0)) continue;
    accumulate_lambda(g, ai, g.inverse(x), w, out);
  }
  return FourierBlock{alpha, std::move(out)};
}

FourierBlock rep_of_measure(const GroupMeasure& mu, const Character& alpha) {
  const auto& g = mu.group();
  const int m = g.k_order();
  const std::size_t ai = g.a_index(alpha.alpha);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Complex w = mu[x];
    if (w == Complex(0.0)) continue;
    accumulate_lambda(g, ai, x, w, out);
  }
  return FourierBlock{alpha, std::move(out)};
}

Eigen::MatrixXcd left_regular_k(const MotionGroup& g, int k) {
  const auto& kg = g.k_group();
  const int m = kg.order();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (int kp = 0; kp < m; ++kp) out(kp, kg.mul(kg.inv(k), kp)) = 1.0;
  return out;
}

Eigen::MatrixXcd right_regular_k(const MotionGroup& g, int k) {
  const auto& kg = g.k_group();
  const int m = kg.order();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (int kp = 0; kp < m; ++kp) out(kp, kg.mul(kp, k)) = 1.0;
  return out;
}

Eigen::MatrixXcd constants_complement_basis(int m) {
  if (m <= 1) return Eigen::MatrixXcd(m, 0);
  // Householder reflection H with H e_0 = u = 1/sqrt(m); columns 1..m-1 of H
  // are orthonormal and orthogonal to u.
  Eigen::VectorXcd w = Eigen::VectorXcd::Constant(m, -1.0 / std::sqrt(double(m)));
  w(0) += 1.0;
  const Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(m, m) -
                             2.0 * w * w.adjoint() / w.squaredNorm();
  return h.rightCols(m - 1);
}

Eigen::MatrixXcd lambda0_complement_block(const GroupMeasure& mu) {
  const int m = mu.group().k_order();
  const Character zero{Coords(mu.group().rank(), 0)};
  const Eigen::MatrixXcd b = constants_complement_basis(m);
  return b.adjoint() * fourier(mu, zero).matrix * b;
}

double orbit_conjugation_check(const MotionGroup& g, const Character& alpha,
                               int kprime) {
  const Character moved = dual_action(g, kprime, alpha);
  const Eigen::MatrixXcd r = right_regular_k(g, kprime);
  const Eigen::MatrixXcd rinv = r.adjoint();
  double worst = 0.0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const GElem el = g.element(x);
    const Eigen::MatrixXcd lhs = lambda_elem(g, moved, el).matrix;
    const Eigen::MatrixXcd rhs = r * lambda_elem(g, alpha, el).matrix * rinv;
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

double pik_consistency(const GroupMeasure& mu) {
  const auto& g = mu.group();
  const int m = g.k_order();
  const KMeasure pk = push_k(mu);
  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    rhs += pk.weights(k) * left_regular_k(g, g.k_group().inv(k));
  }
  const Character zero{Coords(g.rank(), 0)};
  return (fourier(mu, zero).matrix - rhs).cwiseAbs().maxCoeff();
}

}  // namespace motionwalk
