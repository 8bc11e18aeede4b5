#include "motionwalk/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace motionwalk {

namespace {

// Seeds trial t from (seed, t) through the splitmix64 finalizer; a full
// seed_seq per trial costs several microseconds.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(mix(mix(seed) + 0x9e3779b97f4a7c15ULL * (trial + 1)));
}

// 53-bit uniform in [0, 1), spelled out so the stream is portable.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::size_t> sample_path(const GroupMeasure& mu, const WalkConfig& cfg) {
  require_probability(mu);
  if (cfg.trials == 0) throw std::invalid_argument("sample_path: trials must be >= 1");
  const MotionGroup& g = mu.group();

  std::vector<std::size_t> atoms;
  std::vector<double> cdf;
  double running = 0.0;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    const double w = mu[x].real();
    if (w <= 0.0) continue;
    running += w;
    atoms.push_back(x);
    cdf.push_back(running);
  }
  for (double& c : cdf) c /= running;
  cdf.back() = 1.0;

  std::vector<std::size_t> ends(cfg.trials);
  for (unsigned long t = 0; t < cfg.trials; ++t) {
    auto rng = trial_engine(cfg.seed, t);
    std::size_t x = g.identity_index();
    for (unsigned long s = 0; s < cfg.steps; ++s) {
      const double u = unit_draw(rng);
      const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      const auto pos = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
      x = g.product(x, atoms[pos]);
    }
    ends[t] = x;
  }
  return ends;
}

GroupMeasure empirical_distribution(const GroupMeasure& mu, unsigned long n,
                                    unsigned long trials, std::uint64_t seed) {
  const auto ends = sample_path(mu, WalkConfig{n, trials, seed});
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(mu.size()));
  for (std::size_t x : ends) h(static_cast<Eigen::Index>(x)) += 1.0;
  h /= static_cast<double>(trials);
  return GroupMeasure(mu.group(), std::move(h));
}

double tv_to_uniform(const GroupMeasure& dist) {
  require_probability(dist);
  const double u = 1.0 / static_cast<double>(dist.size());
  return 0.5 * (dist.weights().array() - u).abs().sum();
}

double tv_distance(const GroupMeasure& mu, const GroupMeasure& nu) {
  return 0.5 * tv_norm(mu - nu);
}

std::vector<SimulationRow> simulate_curve(const GroupMeasure& mu,
                                          const std::vector<unsigned long>& steps,
                                          unsigned long trials, std::uint64_t seed) {
  std::vector<SimulationRow> rows;
  for (unsigned long n : steps) {
    const GroupMeasure exact = convolution_power(mu, n);
    const GroupMeasure emp = empirical_distribution(mu, n, trials, seed);
    rows.push_back({n, tv_to_uniform(exact), tv_to_uniform(emp), tv_distance(emp, exact)});
  }
  return rows;
}

}  // namespace motionwalk
