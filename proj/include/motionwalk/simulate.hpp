#pragma once

// Monte Carlo random walks X_n = xi_1 xi_2 ... xi_n with xi_i i.i.d. ~ mu.

#include <cstdint>
#include <vector>

#include "motionwalk/group_core.hpp"
#include "motionwalk/measures.hpp"

namespace motionwalk {

struct WalkConfig {
  unsigned long steps = 0;
  unsigned long trials = 1;
  std::uint64_t seed = 0;
};

/// Endpoint (canonical index) of each trial. Trial i draws from its own
/// generator seeded by (seed, i), so results do not depend on trial order.
/// Throws NotProbability, or std::invalid_argument when trials == 0.
std::vector<std::size_t> sample_path(const GroupMeasure& mu, const WalkConfig& cfg);

/// Histogram of sample_path endpoints, normalized.
GroupMeasure empirical_distribution(const GroupMeasure& mu, unsigned long n,
                                    unsigned long trials, std::uint64_t seed);

/// (1/2) sum_x |dist(x) - 1/|G||. Throws NotProbability.
double tv_to_uniform(const GroupMeasure& dist);

/// (1/2) ||mu - nu||.
double tv_distance(const GroupMeasure& mu, const GroupMeasure& nu);

struct SimulationRow {
  unsigned long n = 0;
  double tv_exact = 0.0;      // TV(mu^n, uniform)
  double tv_empirical = 0.0;  // TV(empirical, uniform)
  double tv_gap = 0.0;        // TV(empirical, mu^n)
};

/// One row per n in `steps`.
std::vector<SimulationRow> simulate_curve(const GroupMeasure& mu,
                                          const std::vector<unsigned long>& steps,
                                          unsigned long trials, std::uint64_t seed);

}  // namespace motionwalk
