#pragma once

// Finite motion groups G = (Z_n)^d x| K.
//
// K is given extensionally by its multiplication table (identity at index 0)
// together with one d x d integer matrix per element; the matrix M_k acts on
// A = (Z_n)^d as a column vector, a |-> M_k a (mod n). The dual group of A is
// identified with (Z_n)^d through <a, alpha> = exp(2 pi i (a . alpha) / n),
// and K acts on it by alpha |-> alpha o phi_{k^-1}, i.e. the row vector
// alpha M_{k^-1}.
//
// Elements of G are enumerated canonically: a in lexicographic order (base-n
// digits, first coordinate most significant), then k. The element with index
// i has a-index i / |K| and k-index i % |K|, so index 0 is the identity.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include <Eigen/Core>

namespace motionwalk {

using Complex = std::complex<double>;
using Coords = std::vector<int>;
using IndexTable = std::vector<std::vector<int>>;

/// A = (Z_n)^d.
struct AbelianGroup {
  int modulus = 1;
  int rank = 1;

  std::size_t order() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// A finite group K given by its table, with a homomorphism into GL_d(Z_n).
struct KGroup {
  IndexTable table;
  std::vector<int> inverses;
  std::vector<Eigen::MatrixXi> action;  // reduced mod n

  int order() const { return static_cast<int>(table.size()); }
  int mul(int i, int j) const { return table[i][j]; }
  int inv(int i) const { return inverses[i]; }
};

struct GElem {
  Coords a;
  int k = 0;

  auto operator<=>(const GElem&) const = default;
};

struct Character {
  Coords alpha;

  auto operator<=>(const Character&) const = default;
  bool is_zero() const;
};

struct DualOrbit {
  Character representative;
  std::vector<Character> members;
  int stabilizer_size = 0;
};

/// Immutable handle to a validated motion group. Copies share state.
class MotionGroup {
 public:
  const AbelianGroup& abelian() const;
  const KGroup& k_group() const;

  std::size_t order() const;    // |G|
  std::size_t a_order() const;  // |A|
  int k_order() const;          // |K|
  int modulus() const { return abelian().modulus; }
  int rank() const { return abelian().rank; }

  // Canonical enumeration.
  std::size_t index_of(const GElem& x) const;
  GElem element(std::size_t index) const;
  std::size_t a_index(const Coords& a) const;
  Coords a_coords(std::size_t a_index) const;
  static constexpr std::size_t identity_index() { return 0; }

  /// Product and inverse on canonical indices. The |G| x |G| product table is
  /// built on first use and shared by every copy of this handle.
  std::size_t product(std::size_t x, std::size_t y) const;
  std::size_t inverse(std::size_t x) const;
  const std::vector<std::uint32_t>& product_table() const;

  /// Index of phi_k(a) in A.
  std::size_t act(int k, std::size_t a_index) const;
  /// Index of phi_k(alpha) in the dual group.
  std::size_t dual_act(int k, std::size_t alpha_index) const;
  /// <a, alpha> as a root of unity.
  Complex pairing(std::size_t a_index, std::size_t alpha_index) const;

  bool operator==(const MotionGroup& other) const;

 private:
  struct Impl;
  explicit MotionGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend MotionGroup build_motion_group(int, int, const IndexTable&,
                                        const std::vector<Eigen::MatrixXi>&);
};

/// Validates the K table (closure, identity at 0, Latin square, associativity)
/// and the action (identity at 0, invertible mod n, homomorphism).
/// Throws NotAGroupTable, NotAHomomorphism or NotInvertible.
MotionGroup build_motion_group(int modulus, int rank, const IndexTable& table,
                               const std::vector<Eigen::MatrixXi>& action);

GElem multiply(const MotionGroup& g, const GElem& x, const GElem& y);
GElem inverse(const MotionGroup& g, const GElem& x);
GElem identity(const MotionGroup& g);

/// phi_k(alpha) = alpha M_{k^-1} (row vector), reduced mod n.
Character dual_action(const MotionGroup& g, int k, const Character& alpha);

/// <a, alpha>.
Complex pairing(const MotionGroup& g, const Coords& a, const Character& alpha);

/// Partition of the dual group into K-orbits. The orbit of 0 comes first and
/// each representative is the lexicographically smallest member.
std::vector<DualOrbit> dual_orbits(const MotionGroup& g);

/// Determinant of an integer matrix reduced mod n, in [0, n).
long long det_mod(const Eigen::MatrixXi& m, int modulus);

}  // namespace motionwalk
