#pragma once

// The group Z^2 x| Z, where k acts on row vectors by n -> n Gamma^k with
// Gamma = [[1,2],[2,3]], the measure
//   mu = (delta_a + delta_b + delta_{bc} + delta_{c^2}) / 4,
// a = (0,0,1), b = (1,2,1), c = (2,3,1), and the induced representations
//   [Lambda_t(n, k) phi](m) = exp(2 pi i t Gamma^-m n') phi(m - k)
// on l^2(Z).

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

#include "motionwalk/qsqrt5.hpp"

namespace motionwalk {

struct ZElem {
  mpz_class n1;
  mpz_class n2;
  mpz_class k;

  friend bool operator==(const ZElem& x, const ZElem& y) {
    return x.n1 == y.n1 && x.n2 == y.n2 && x.k == y.k;
  }
  friend bool operator<(const ZElem& x, const ZElem& y);
};

using IntMatrix2 = std::array<std::array<mpz_class, 2>, 2>;
using ZVector = std::array<mpz_class, 2>;
using QVector = std::array<QSqrt5, 2>;

/// Gamma^e for any integer e (Gamma has determinant -1).
IntMatrix2 gamma_power(long e);

/// (n, k)(m, l) = (n + m Gamma^k, k + l). Throws Overflow if k does not fit
/// in a long.
ZElem z_multiply(const ZElem& x, const ZElem& y);
ZElem z_inverse(const ZElem& x);
ZElem z_identity();

/// Atoms a, b, bc, c^2 with weight 1/4 each; the products are computed.
std::vector<std::pair<ZElem, double>> rosenblatt_measure();

struct EigenParameter {
  QVector t;
  QSqrt5 lambda;
};

/// lambda = sqrt 5 - 2 and the left eigenvector t = (1, t2) of Gamma^-1,
/// obtained by solving t1 (-3 - lambda) + 2 t2 = 0.
EigenParameter eigen_parameter();

/// row * m, exactly.
QVector row_times(const QVector& row, const IntMatrix2& m);
/// row . v, exactly.
QSqrt5 dot(const QVector& row, const ZVector& v);

/// A finitely supported vector on Z: values[i] sits at offset + i.
struct WindowVector {
  long offset = 0;
  Eigen::VectorXcd values;

  std::complex<double> at(long m) const;
  long end() const { return offset + static_cast<long>(values.size()); }
  double norm() const { return values.norm(); }
};

/// phi_n = n^-1/2 on 0 <= m < n.
WindowVector indicator_window(long n);

/// Lambda_t(mu) phi by the two-term recurrence. When t is an eigenvector of
/// Gamma^-1 the exponents are lambda^m (t . v); otherwise t Gamma^-m is
/// formed from the matrix power. Exponents are exact and only reduced mod 1
/// before exp.
WindowVector apply_lambda_mu(const QVector& t, const WindowVector& phi);

/// Lambda_t(x) phi straight from the definition, through Gamma^-m.
WindowVector apply_element(const QVector& t, const ZElem& x,
                           const WindowVector& phi);

/// sum_x mu(x) Lambda_t(x) phi assembled from apply_element.
WindowVector apply_lambda_mu_direct(const QVector& t, const WindowVector& phi);

/// Difference of two window vectors as a window vector.
WindowVector subtract(const WindowVector& x, const WindowVector& y);

struct DefectNorm {
  double direct = 0.0;       // ||Lambda_t(mu) phi_n - phi_n||^2
  double closed_form = 0.0;  // expansion in the phases
};

/// Squared defect of phi_n. The closed form is
///   1/n + (1/16n) [ |A(1) - 4|^2 + |B(n+1)|^2 + |A(n) + B(n)|^2
///                   + sum_{j=2}^{n-1} |A(j) + B(j) - 4|^2 ],
/// A(m) = 1 + e(m,(1,2)), B(m) = e(m,(9,15)) + e(m,(10,16)),
/// e(m,v) = exp(2 pi i t Gamma^-m v'). Requires n >= 3.
DefectNorm defect_norm(const QVector& t, long n);

struct WitnessSearch {
  bool adapted = false;             // generators reached from supp and inverses
  bool strictly_aperiodic = false;  // reached inside the normal closure of differences
  int adapted_depth = -1;
  int aperiodic_depth = -1;
  std::size_t nodes = 0;
};

/// Bounded breadth-first search for (1,0,0), (0,1,0), (0,0,1), first among
/// words in supp mu and its inverses, then among words in the differences
/// s0^-1 s, their inverses, and conjugation by supp mu. Throws BudgetExceeded
/// once more than node_budget elements have been visited.
WitnessSearch witness_search(int max_word_length,
                             std::size_t node_budget = 2'000'000);

/// True when both searches succeed within max_word_length. False means only
/// that no witness is that short.
bool aperiodicity_witness(int max_word_length);

}  // namespace motionwalk
