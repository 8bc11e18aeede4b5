#pragma once

// Ready-made K tables and actions for building motion groups.

#include <string>
#include <vector>

#include <Eigen/Core>

#include "motionwalk/group_core.hpp"

namespace motionwalk::catalog {

IndexTable trivial_table();
/// Z_m, element i is the rotation by i.
IndexTable cyclic_table(int m);
/// D_m of order 2m: index f*m + i is s^f r^i, with s r s = r^-1.
IndexTable dihedral_table(int m);
/// Direct product; index i*|T2| + j is (i, j).
IndexTable direct_product(const IndexTable& t1, const IndexTable& t2);

/// Extends generator images to a map K -> integer matrices along the Cayley
/// graph, M(x g) = M(x) M(g). The result is only a homomorphism if the
/// images satisfy the relations of K; build_motion_group checks this.
std::vector<Eigen::MatrixXi> action_from_generators(
    const IndexTable& table, const std::vector<int>& generators,
    const std::vector<Eigen::MatrixXi>& images, int modulus);

/// Every element of K acts as the identity.
std::vector<Eigen::MatrixXi> trivial_action(int k_order, int rank);

/// Z_n x| Z_2 with s acting as a -> -a; order 2n (dihedral).
MotionGroup dihedral_group(int n);
/// Z_5 x| Z_2, s acting as multiplication by 4; order 10.
MotionGroup order10_group();
/// A alone, K trivial.
MotionGroup abelian_group(int modulus, int rank = 1);
/// Z_n x| Z_m with k acting as multiplication by u^k; u^m = 1 mod n.
MotionGroup unit_group(int modulus, int unit, int m);

}  // namespace motionwalk::catalog
