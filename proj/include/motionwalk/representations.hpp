#pragma once

// Induced representations Lambda_alpha = ind_{A x {1}}^G(alpha) realized on
// l2(K) in the delta basis:
//
//   [Lambda_alpha(a, k) phi](k') = <a, phi_{k'}(alpha)> phi(k^-1 k').
//
// Every irreducible representation of G embeds in some Lambda_alpha, and
// Lambda_alpha depends on alpha only up to unitary equivalence within a dual
// orbit, so one block per orbit representative carries all spectral data.

#include <Eigen/Core>

#include "motionwalk/group_core.hpp"
#include "motionwalk/measures.hpp"

namespace motionwalk {

/// A |K| x |K| block attached to a character: Lambda_alpha(x), mu-hat or U(mu).
struct RepBlock {
  Character alpha;
  Eigen::MatrixXcd matrix;
};
using RepMatrix = RepBlock;
using FourierBlock = RepBlock;

RepMatrix lambda_elem(const MotionGroup& g, const Character& alpha,
                      const GElem& x);

/// mu-hat(Lambda_alpha) = sum_x mu(x) Lambda_alpha(x^-1).
FourierBlock fourier(const GroupMeasure& mu, const Character& alpha);

/// Lambda_alpha(mu) = sum_x mu(x) Lambda_alpha(x).
FourierBlock rep_of_measure(const GroupMeasure& mu, const Character& alpha);

/// Left and right regular representations of K on l2(K):
/// [L(k) phi](k') = phi(k^-1 k'), [R(k) phi](k') = phi(k' k).
Eigen::MatrixXcd left_regular_k(const MotionGroup& g, int k);
Eigen::MatrixXcd right_regular_k(const MotionGroup& g, int k);

/// Orthonormal basis (columns) of the complement of the constants in C^m.
Eigen::MatrixXcd constants_complement_basis(int m);

/// mu-hat(Lambda_0) compressed to the orthocomplement of the constants, where
/// the trivial representation sits. Empty when |K| = 1.
Eigen::MatrixXcd lambda0_complement_block(const GroupMeasure& mu);

/// max_x max_{ij} |Lambda_{phi_k'(alpha)}(x) - R(k') Lambda_alpha(x) R(k')^-1|
/// over all x in G.
double orbit_conjugation_check(const MotionGroup& g, const Character& alpha,
                               int kprime);

/// max_{ij} |mu-hat(Lambda_0) - sum_k pi_K(mu)(k) L_K(k^-1)|.
double pik_consistency(const GroupMeasure& mu);

}  // namespace motionwalk
