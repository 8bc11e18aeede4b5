#pragma once

// Classification of probability measures against the conditions
//   (SR) rho(mu-hat(U)) < 1 for every nontrivial irreducible U,
//   (S)  1 not in sigma(mu-hat(U)) for every nontrivial irreducible U,
//   (A)  adapted, (ASA) adapted and strictly aperiodic,
//   (M)  mixing by convolutions, (E) ergodic by convolutions,
// and weak mixing, with (M), (E) and weak mixing decided empirically from
// convolution powers. The nontrivial part of the dual is covered by the
// nonzero orbit blocks plus the Lambda_0 block with the constants removed.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "motionwalk/group_core.hpp"
#include "motionwalk/measures.hpp"

namespace motionwalk {

enum class TriState { Holds, Fails, Indeterminate };
enum class Empirical { Holds, Fails, Inconclusive };

std::string to_string(TriState s);
std::string to_string(Empirical e);

struct BlockValue {
  Character representative;
  bool complement = false;
  double value = 0.0;
};

struct SpectralCondition {
  TriState state = TriState::Indeterminate;
  BlockValue witness;              // extremal block
  std::vector<BlockValue> blocks;  // nonzero orbits, then the complement
};

struct SubgroupCheck {
  bool holds = false;
  std::size_t size = 0;  // generated subgroup / normal closure
};

struct DecayCurve {
  std::vector<std::pair<unsigned long, double>> points;  // (n, value)
  Empirical verdict = Empirical::Inconclusive;
  double threshold = 0.0;
  double limit_estimate = 0.0;  // only meaningful for Cesaro-type curves
};

/// Tolerance band for the spectral conditions. A quantity q that must be
/// strictly positive (1 - radius, or sigma_min(I - block)) HOLDS when
/// q > tol, FAILS when q <= tol * fail_fraction, and is INDETERMINATE in
/// between.
struct SpectralTolerance {
  double tol = 1e-8;
  double fail_fraction = 1e-3;
};

SpectralCondition check_sr(const GroupMeasure& mu, SpectralTolerance tol = {});
SpectralCondition check_s(const GroupMeasure& mu, SpectralTolerance tol = {});

/// Subgroup generated by supp mu.
SubgroupCheck adapted(const GroupMeasure& mu);
/// Normal closure of {s0^-1 s : s in supp mu}; strictly aperiodic iff it is G.
/// Throws EmptySupport.
SubgroupCheck strictly_aperiodic_check(const GroupMeasure& mu);

/// Generic support for subgroup computations on canonical indices.
std::vector<std::size_t> generated_subgroup(const MotionGroup& g,
                                            const std::vector<std::size_t>& gens);
std::vector<std::size_t> normal_closure(const MotionGroup& g,
                                        const std::vector<std::size_t>& gens);

/// sup_x ||f_x * mu^n||_1 at n = 1, 2, 4, ..., n_max (and n_max itself).
/// Holds when the last value is below threshold; Fails when the last three
/// values stay above 10 * threshold without decaying (ratio >= 0.9).
DecayCurve empirical_mixing(const GroupMeasure& mu, unsigned long n_max = 1024,
                            double threshold = 1e-6);

/// sup_x ||f_x * S_n||_1 with S_n = n^-1 sum_{k<n} mu^k, recorded at dyadic n.
/// Same verdict rule as empirical_mixing.
DecayCurve empirical_ergodic(const GroupMeasure& mu, unsigned long n_max = 512,
                             double threshold = 0.1);

struct WeakMixingOptions {
  unsigned long n_max = 512;
  double threshold = 0.01;
  double floor_factor = 5.0;
  int random_functions = 4;
  std::uint64_t seed = 0x5eed;
  bool matrix_coefficients = true;
  std::vector<Eigen::VectorXcd> extra_functions;  // bounded h on G
};

/// Cesaro averages n^-1 sum_{k<n} |<f_x * mu^k, h>| for every basis f_x and
/// every test function h: matrix coefficients of each Lambda_alpha block plus
/// seeded random functions with |h| <= 1. The curve records the sup over
/// (f, h). Since the averages behave like a + b/n, the limit a is estimated
/// as 2 v(n_max) - v(n_max / 2): Holds when that is below threshold, Fails
/// when the last three values and the estimate exceed floor_factor * threshold.
DecayCurve empirical_weak_mixing(const GroupMeasure& mu,
                                 const WeakMixingOptions& opts = {});

/// max over nontrivial blocks of the largest column norm of mu-hat^n.
double strong_operator_power(const GroupMeasure& mu, unsigned long n);
/// Same for the Cesaro mean n^-1 sum_{k<n} mu-hat^k.
double strong_operator_cesaro(const GroupMeasure& mu, unsigned long n);

struct ClassifyOptions {
  SpectralTolerance spectral;
  unsigned long mixing_n_max = 1024;
  double mixing_threshold = 1e-6;
  unsigned long ergodic_n_max = 512;
  double ergodic_threshold = 0.1;
  WeakMixingOptions weak_mixing;
};

struct Verdict {
  SpectralCondition sr;
  SpectralCondition s;
  SubgroupCheck adapted;
  SubgroupCheck strictly_aperiodic;
  DecayCurve empirical_mixing;
  DecayCurve empirical_ergodic;
  DecayCurve weak_mixing_empirical;
  std::vector<std::string> consistency;  // violated implications
};

/// Evaluates every condition and the equivalence grid. Throws NotProbability.
Verdict classify(const GroupMeasure& mu, const ClassifyOptions& opts = {});

/// Implications violated by a verdict, skipping inconclusive entries:
/// (E) <=> (A) <=> (S), (M) <=> (ASA) <=> (SR), weak mixing <=> (M),
/// (SR) => (S), (E) => (A), (M) => (ASA).
std::vector<std::string> consistency_violations(const Verdict& v);

std::vector<std::string> cross_check(const GroupMeasure& mu,
                                     const ClassifyOptions& opts = {});

}  // namespace motionwalk
