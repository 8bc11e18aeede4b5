#pragma once

// Dense spectral quantities of Fourier blocks and of measures in M(G).

#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "motionwalk/errors.hpp"
#include "motionwalk/group_core.hpp"
#include "motionwalk/measures.hpp"

namespace motionwalk {

template <typename Derived>
Eigen::VectorXcd eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) return Eigen::VectorXcd(0);
  const Eigen::MatrixXcd a = m.template cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eigenvalue iteration did not converge");
  }
  return solver.eigenvalues();
}

/// max |eigenvalue|; 0 for an empty matrix. Throws NoConvergence.
template <typename Derived>
double spectral_radius(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) return 0.0;
  return eigenvalues(m).cwiseAbs().maxCoeff();
}

/// Largest singular value; 0 for an empty matrix.
template <typename Derived>
double op_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) return 0.0;
  const Eigen::MatrixXcd a = m.template cast<std::complex<double>>();
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0);
}

/// Smallest singular value; +inf for an empty matrix.
template <typename Derived>
double min_singular_value(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd a = m.template cast<std::complex<double>>();
  const auto sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues();
  return sv(sv.size() - 1);
}

struct OneInSpectrum {
  bool verdict = false;          // 1 in sigma(m) within tolerance
  double margin = 0.0;           // sigma_min(I - m)
  double eigen_distance = 0.0;   // min |lambda - 1| over eigenvalues
};

/// Primary criterion: sigma_min(I - m) <= tol. An empty block has margin
/// +inf and verdict false.
template <typename Derived>
OneInSpectrum one_in_spectrum(const Eigen::MatrixBase<Derived>& m,
                              double tol = 1e-8) {
  OneInSpectrum out;
  if (m.rows() == 0) {
    out.margin = out.eigen_distance = std::numeric_limits<double>::infinity();
    return out;
  }
  const Eigen::MatrixXcd a = m.template cast<std::complex<double>>();
  const Eigen::MatrixXcd shifted =
      Eigen::MatrixXcd::Identity(a.rows(), a.cols()) - a;
  out.margin = min_singular_value(shifted);
  out.verdict = out.margin <= tol;
  try {
    out.eigen_distance =
        (eigenvalues(a).array() - std::complex<double>(1.0)).abs().minCoeff();
  } catch (const NoConvergence&) {
    out.eigen_distance = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

struct GelfandEstimate {
  double radius = 0.0;
  int squarings = 0;       // k such that the estimate is ||mu^(2^k)||^(2^-k)
  bool converged = false;  // successive estimates differed by < tol
  std::vector<double> history;
};

/// Repeated-squaring estimate of lim ||mu^n||^(1/n). Every step renormalizes
/// to unit total variation and keeps the log scale in long double, so the
/// returned value is ||mu^(2^k)||^(2^-k), an upper bound on the radius.
/// Throws Overflow if the scale stops being finite.
GelfandEstimate gelfand_radius(const GroupMeasure& mu, double tol = 1e-12,
                               int kmax = 40);

/// sup over the unitary dual of ||U(mu)||, i.e. max over orbit
/// representatives of ||Lambda_alpha(mu)||.
double star_norm(const GroupMeasure& mu);

struct BlockSpectrum {
  Character representative;
  bool complement = false;  // the Lambda_0 block with constants removed
  double spectral_radius = 0.0;
  double op_norm = 0.0;
  bool one_in_spectrum = false;
  double margin = 0.0;
};

struct SpectralReport {
  double gelfand_radius_estimate = 0.0;
  int squarings = 0;
  std::vector<BlockSpectrum> per_orbit;  // one entry per dual orbit
  BlockSpectrum lambda0_complement;
  double sup_radius = 0.0;               // max over per_orbit radii
  double star_norm = 0.0;
  double singular_term = 0.0;
  std::string singular_reason;
  double formula_gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Per-block spectral data for every dual orbit representative plus the
/// Lambda_0 complement.
std::vector<BlockSpectrum> block_spectra(const GroupMeasure& mu,
                                         double one_tol = 1e-8);
BlockSpectrum complement_spectrum(const GroupMeasure& mu, double one_tol = 1e-8);

/// Compares lim ||mu^n||^(1/n) with sup_alpha rho(mu-hat(Lambda_alpha)) v
/// singular term (identically 0 on a discrete group).
SpectralReport verify_srf(const GroupMeasure& mu, double tol = 1e-6,
                          int kmax = 40, double gelfand_tol = 1e-12);

}  // namespace motionwalk
