#pragma once

// Complex measures on a finite motion group, stored densely over the
// canonical element enumeration. Haar measure is counting measure, so every
// measure is a function on G and M(G) = L1(G).

#include <vector>

#include <Eigen/Core>

#include "motionwalk/group_core.hpp"

namespace motionwalk {

class GroupMeasure {
 public:
  GroupMeasure(MotionGroup group, Eigen::VectorXcd weights);

  static GroupMeasure zero(const MotionGroup& g);
  static GroupMeasure point_mass(const MotionGroup& g, std::size_t index);
  static GroupMeasure point_mass(const MotionGroup& g, const GElem& x);
  static GroupMeasure uniform(const MotionGroup& g);

  const MotionGroup& group() const { return group_; }
  const Eigen::VectorXcd& weights() const { return weights_; }
  Complex operator[](std::size_t index) const { return weights_(index); }
  std::size_t size() const { return static_cast<std::size_t>(weights_.size()); }

  /// Canonical indices with nonzero weight.
  std::vector<std::size_t> support() const;
  Complex total_mass() const { return weights_.sum(); }
  GroupMeasure conj() const;

  GroupMeasure& operator+=(const GroupMeasure& other);
  GroupMeasure& operator-=(const GroupMeasure& other);
  GroupMeasure& operator*=(Complex s);

 private:
  MotionGroup group_;
  Eigen::VectorXcd weights_;
};

GroupMeasure operator+(GroupMeasure lhs, const GroupMeasure& rhs);
GroupMeasure operator-(GroupMeasure lhs, const GroupMeasure& rhs);
GroupMeasure operator*(Complex s, GroupMeasure mu);

/// Measure on K (the pushforward target).
struct KMeasure {
  MotionGroup group;  // K is group.k_group()
  Eigen::VectorXcd weights;
};

/// (mu * nu)(x) = sum_y mu(y) nu(y^-1 x). Throws GroupMismatch.
GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu);
/// n-fold convolution power by repeated squaring; mu^0 = delta_e.
GroupMeasure convolution_power(const GroupMeasure& mu, unsigned long n);
KMeasure convolve(const KMeasure& mu, const KMeasure& nu);

/// Total variation norm sum_x |mu(x)|.
double tv_norm(const GroupMeasure& mu);

/// pi_K(mu)(k) = sum_a mu(a, k).
KMeasure push_k(const GroupMeasure& mu);

/// nu = (h d lambda_A) x delta_1 where h is the inverse Fourier transform on A
/// of the indicator of `s`; then nu-hat(Lambda_alpha) = 1_s(alpha) I and nu is
/// central. Throws ContainsZeroCharacter or NotOrbitClosed.
GroupMeasure central_measure(const MotionGroup& g,
                             const std::vector<Character>& s);

/// f_x = delta_x - delta_e for x != e, in canonical order.
std::vector<GroupMeasure> mean_zero_basis(const MotionGroup& g);

bool is_probability(const GroupMeasure& mu, double tol = 1e-12);
/// Throws NotProbability unless is_probability(mu).
void require_probability(const GroupMeasure& mu);

}  // namespace motionwalk
