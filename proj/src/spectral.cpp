#include "motionwalk/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "motionwalk/representations.hpp"

namespace motionwalk {

GelfandEstimate gelfand_radius(const GroupMeasure& mu, double tol, int kmax) {
  GelfandEstimate out;
  const double norm0 = tv_norm(mu);
  if (norm0 == 0.0) {
    out.converged = true;
    out.history.push_back(0.0);
    return out;
  }
  // log_scale = 2^-k log ||mu^(2^k)||
  long double log_scale = std::log(static_cast<long double>(norm0));
  GroupMeasure nu = (1.0 / norm0) * mu;
  double previous = static_cast<double>(std::exp(log_scale));
  out.radius = previous;
  out.history.push_back(previous);
  for (int k = 1; k <= kmax; ++k) {
    nu = convolve(nu, nu);
    const double s = tv_norm(nu);
    if (s == 0.0) {
      // mu^(2^k) = 0: nilpotent in M(G).
      out.radius = 0.0;
      out.squarings = k;
      out.converged = true;
      out.history.push_back(0.0);
      return out;
    }
    if (!std::isfinite(s)) throw Overflow("gelfand_radius: norm is not finite");
    nu *= 1.0 / s;
    log_scale += std::log(static_cast<long double>(s)) / std::ldexp(1.0L, k);
    if (!std::isfinite(static_cast<double>(log_scale))) {
      throw Overflow("gelfand_radius: log scale is not finite");
    }
    const double current = static_cast<double>(std::exp(log_scale));
    out.history.push_back(current);
    out.radius = current;
    out.squarings = k;
    if (std::abs(current - previous) < tol) {
      out.converged = true;
      break;
    }
    previous = current;
  }
  return out;
}

double star_norm(const GroupMeasure& mu) {
  double best = 0.0;
  for (const auto& orbit : dual_orbits(mu.group())) {
    best = std::max(best, op_norm(rep_of_measure(mu, orbit.representative).matrix));
  }
  return best;
}

namespace {

BlockSpectrum describe(const Eigen::MatrixXcd& block, double one_tol) {
  BlockSpectrum b;
  b.spectral_radius = spectral_radius(block);
  b.op_norm = op_norm(block);
  const auto one = one_in_spectrum(block, one_tol);
  b.one_in_spectrum = one.verdict;
  b.margin = one.margin;
  return b;
}

}  // namespace

std::vector<BlockSpectrum> block_spectra(const GroupMeasure& mu,
                                         double one_tol) {
  std::vector<BlockSpectrum> out;
  for (const auto& orbit : dual_orbits(mu.group())) {
    auto b = describe(fourier(mu, orbit.representative).matrix, one_tol);
    b.representative = orbit.representative;
    out.push_back(std::move(b));
  }
  return out;
}

BlockSpectrum complement_spectrum(const GroupMeasure& mu, double one_tol) {
  auto b = describe(lambda0_complement_block(mu), one_tol);
  b.representative = Character{Coords(mu.group().rank(), 0)};
  b.complement = true;
  return b;
}

SpectralReport verify_srf(const GroupMeasure& mu, double tol, int kmax,
                          double gelfand_tol) {
  SpectralReport r;
  const auto est = gelfand_radius(mu, gelfand_tol, kmax);
  r.gelfand_radius_estimate = est.radius;
  r.squarings = est.squarings;
  r.per_orbit = block_spectra(mu);
  r.lambda0_complement = complement_spectrum(mu);
  for (const auto& b : r.per_orbit) {
    r.sup_radius = std::max(r.sup_radius, b.spectral_radius);
  }
  r.star_norm = star_norm(mu);
  r.singular_term = 0.0;
  r.singular_reason =
      "discrete Haar: all measures absolutely continuous";
  r.formula_gap =
      std::abs(r.gelfand_radius_estimate - std::max(r.sup_radius, r.singular_term));
  r.tolerance = tol;
  r.pass = r.formula_gap <= tol;
  return r;
}

}  // namespace motionwalk
