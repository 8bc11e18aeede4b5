#include "motionwalk/classify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <random>

#include "motionwalk/errors.hpp"
#include "motionwalk/representations.hpp"
#include "motionwalk/spectral.hpp"

namespace motionwalk {

std::string to_string(TriState s) {
  switch (s) {
    case TriState::Holds: return "HOLDS";
    case TriState::Fails: return "FAILS";
    case TriState::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

std::string to_string(Empirical e) {
  switch (e) {
    case Empirical::Holds: return "HOLDS";
    case Empirical::Fails: return "FAILS";
    case Empirical::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

Character zero_character(const MotionGroup& g) {
  return Character{Coords(g.rank(), 0)};
}

// Nontrivial blocks: mu-hat at every nonzero orbit representative, then the
// Lambda_0 complement.
std::vector<std::pair<BlockValue, Eigen::MatrixXcd>> nontrivial_blocks(
    const GroupMeasure& mu) {
  std::vector<std::pair<BlockValue, Eigen::MatrixXcd>> out;
  for (const auto& orbit : dual_orbits(mu.group())) {
    if (orbit.representative.is_zero()) continue;
    out.push_back({BlockValue{orbit.representative, false, 0.0},
                   fourier(mu, orbit.representative).matrix});
  }
  out.push_back({BlockValue{zero_character(mu.group()), true, 0.0},
                 lambda0_complement_block(mu)});
  return out;
}

// `margins` must be strictly positive for the condition to hold.
SpectralCondition decide(std::vector<BlockValue> blocks,
                         const std::vector<double>& margins,
                         SpectralTolerance tol) {
  SpectralCondition c;
  c.blocks = std::move(blocks);
  std::size_t worst = 0;
  for (std::size_t i = 1; i < margins.size(); ++i) {
    if (margins[i] < margins[worst]) worst = i;
  }
  c.witness = c.blocks[worst];
  const double m = margins[worst];
  if (m > tol.tol) {
    c.state = TriState::Holds;
  } else if (m <= tol.tol * tol.fail_fraction) {
    c.state = TriState::Fails;
  } else {
    c.state = TriState::Indeterminate;
  }
  return c;
}

std::vector<unsigned long> dyadic_schedule(unsigned long n_max) {
  std::vector<unsigned long> s;
  for (unsigned long n = 1; n <= n_max; n *= 2) s.push_back(n);
  if (s.empty() || s.back() != n_max) s.push_back(n_max);
  return s;
}

// sup_x ||f_x * p||_1 = sup_x sum_y |p(y) - p(x y)|
double sup_mean_zero_norm(const MotionGroup& g, const Eigen::VectorXcd& p) {
  const std::size_t n = g.order();
  const auto& table = g.product_table();
  double best = 0.0;
  for (std::size_t x = 1; x < n; ++x) {
    const std::uint32_t* row = table.data() + x * n;
    double s = 0.0;
    for (std::size_t y = 0; y < n; ++y) s += std::abs(p(y) - p(row[y]));
    best = std::max(best, s);
  }
  return best;
}

bool stable_floor(const std::vector<std::pair<unsigned long, double>>& pts,
                  double floor) {
  const std::size_t take = std::min<std::size_t>(3, pts.size());
  if (take == 0) return false;
  const auto first = pts.end() - static_cast<std::ptrdiff_t>(take);
  for (auto it = first; it != pts.end(); ++it) {
    if (!(it->second > floor)) return false;
  }
  return pts.back().second >= 0.9 * first->second;
}

Empirical threshold_verdict(const DecayCurve& c) {
  if (c.points.empty()) return Empirical::Inconclusive;
  if (c.points.back().second < c.threshold) return Empirical::Holds;
  if (stable_floor(c.points, 10.0 * c.threshold)) return Empirical::Fails;
  return Empirical::Inconclusive;
}

}  // namespace

SpectralCondition check_sr(const GroupMeasure& mu, SpectralTolerance tol) {
  require_probability(mu);
  std::vector<BlockValue> blocks;
  std::vector<double> margins;
  for (auto& [info, block] : nontrivial_blocks(mu)) {
    info.value = spectral_radius(block);
    margins.push_back(1.0 - info.value);
    blocks.push_back(info);
  }
  return decide(std::move(blocks), margins, tol);
}

SpectralCondition check_s(const GroupMeasure& mu, SpectralTolerance tol) {
  require_probability(mu);
  std::vector<BlockValue> blocks;
  std::vector<double> margins;
  for (auto& [info, block] : nontrivial_blocks(mu)) {
    info.value = one_in_spectrum(block, tol.tol).margin;
    margins.push_back(info.value);
    blocks.push_back(info);
  }
  return decide(std::move(blocks), margins, tol);
}

std::vector<std::size_t> generated_subgroup(const MotionGroup& g,
                                            const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> members{MotionGroup::identity_index()};
  in[0] = 1;
  std::deque<std::size_t> queue{0};
  std::vector<std::size_t> moves;
  for (auto s : gens) {
    moves.push_back(s);
    moves.push_back(g.inverse(s));
  }
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (auto s : moves) {
      const std::size_t next = g.product(cur, s);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> normal_closure(const MotionGroup& g,
                                        const std::vector<std::size_t>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> conjugates;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t xinv = g.inverse(x);
    for (auto s : gens) {
      const std::size_t c = g.product(g.product(x, s), xinv);
      if (!seen[c]) {
        seen[c] = 1;
        conjugates.push_back(c);
      }
    }
  }
  return generated_subgroup(g, conjugates);
}

SubgroupCheck adapted(const GroupMeasure& mu) {
  const auto h = generated_subgroup(mu.group(), mu.support());
  return SubgroupCheck{h.size() == mu.group().order(), h.size()};
}

SubgroupCheck strictly_aperiodic_check(const GroupMeasure& mu) {
  const auto supp = mu.support();
  if (supp.empty()) throw EmptySupport("measure has empty support");
  const auto& g = mu.group();
  const std::size_t s0inv = g.inverse(supp.front());
  std::vector<std::size_t> diffs;
  for (auto s : supp) diffs.push_back(g.product(s0inv, s));
  const auto n = normal_closure(g, diffs);
  return SubgroupCheck{n.size() == g.order(), n.size()};
}

DecayCurve empirical_mixing(const GroupMeasure& mu, unsigned long n_max,
                            double threshold) {
  require_probability(mu);
  DecayCurve c;
  c.threshold = threshold;
  const auto& g = mu.group();
  GroupMeasure power = mu;
  unsigned long n = 1;
  for (unsigned long target : dyadic_schedule(n_max)) {
    if (target == 2 * n) {
      power = convolve(power, power);
      n = target;
    } else if (target != n) {
      power = convolution_power(mu, target);
      n = target;
    }
    c.points.emplace_back(n, sup_mean_zero_norm(g, power.weights()));
  }
  c.limit_estimate = c.points.back().second;
  c.verdict = threshold_verdict(c);
  return c;
}

DecayCurve empirical_ergodic(const GroupMeasure& mu, unsigned long n_max,
                             double threshold) {
  require_probability(mu);
  DecayCurve c;
  c.threshold = threshold;
  const auto& g = mu.group();
  const auto schedule = dyadic_schedule(n_max);
  GroupMeasure power = GroupMeasure::point_mass(g, 0);
  Eigen::VectorXcd running = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.order()));
  std::size_t next = 0;
  for (unsigned long k = 0; k < n_max; ++k) {
    running += power.weights();
    if (k + 1 == schedule[next]) {
      const Eigen::VectorXcd avg = running / static_cast<double>(k + 1);
      c.points.emplace_back(k + 1, sup_mean_zero_norm(g, avg));
      ++next;
    }
    power = convolve(power, mu);
  }
  c.limit_estimate = c.points.back().second;
  c.verdict = threshold_verdict(c);
  return c;
}

DecayCurve empirical_weak_mixing(const GroupMeasure& mu,
                                 const WeakMixingOptions& opts) {
  require_probability(mu);
  DecayCurve c;
  c.threshold = opts.threshold;
  const auto& g = mu.group();
  const std::size_t order = g.order();
  const int m = g.k_order();
  const auto& kg = g.k_group();
  const auto& table = g.product_table();
  const auto schedule = dyadic_schedule(opts.n_max);

  // Matrix-coefficient test functions: h_ij(x) = Lambda_alpha(x)_ij, so that
  // <f_x * mu^k, h_ij> = [(Lambda_alpha(x) - I) Lambda_alpha(mu)^k]_ij.
  struct Block {
    Eigen::MatrixXcd step;       // Lambda_alpha(mu)
    Eigen::MatrixXcd power;      // Lambda_alpha(mu)^k
    std::vector<int> perm;       // [x * m + i] -> column of the nonzero entry
    std::vector<Complex> phase;  // [x * m + i]
    std::vector<double> acc;     // [(x * m + i) * m + j]
  };
  std::vector<Block> blocks;
  if (opts.matrix_coefficients) {
    for (const auto& orbit : dual_orbits(g)) {
      Block b;
      const std::size_t ai = g.a_index(orbit.representative.alpha);
      b.step = rep_of_measure(mu, orbit.representative).matrix;
      b.power = Eigen::MatrixXcd::Identity(m, m);
      b.perm.resize(order * m);
      b.phase.resize(order * m);
      for (std::size_t x = 0; x < order; ++x) {
        const std::size_t a = x / static_cast<std::size_t>(m);
        const int kinv = kg.inv(static_cast<int>(x % static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i) {
          b.perm[x * m + i] = kg.mul(kinv, i);
          b.phase[x * m + i] = g.pairing(a, g.dual_act(i, ai));
        }
      }
      b.acc.assign(order * m * m, 0.0);
      blocks.push_back(std::move(b));
    }
  }

  std::vector<Eigen::VectorXcd> functions = opts.extra_functions;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r = 0; r < opts.random_functions; ++r) {
    Eigen::VectorXcd h(static_cast<Eigen::Index>(order));
    for (std::size_t z = 0; z < order; ++z) {
      const double radius = unit(rng);
      const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
      h(z) = std::polar(radius, theta);
    }
    functions.push_back(std::move(h));
  }
  std::vector<double> fn_acc(functions.size() * order, 0.0);

  GroupMeasure power = GroupMeasure::point_mass(g, 0);
  std::size_t next = 0;
  std::vector<std::pair<unsigned long, double>> raw;
  for (unsigned long k = 0; k < opts.n_max; ++k) {
    for (auto& b : blocks) {
      for (std::size_t x = 1; x < order; ++x) {
        for (int i = 0; i < m; ++i) {
          const int col = b.perm[x * m + i];
          const Complex ph = b.phase[x * m + i];
          double* acc = b.acc.data() + (x * m + i) * m;
          for (int j = 0; j < m; ++j) {
            acc[j] += std::sqrt(std::norm(ph * b.power(col, j) - b.power(i, j)));
          }
        }
      }
      b.power = b.power * b.step;
    }
    if (!functions.empty()) {
      const auto& p = power.weights();
      for (std::size_t f = 0; f < functions.size(); ++f) {
        const auto& h = functions[f];
        const Complex base = (p.array() * h.array()).sum();
        for (std::size_t x = 1; x < order; ++x) {
          const std::uint32_t* row = table.data() + x * order;
          Complex s = 0.0;
          for (std::size_t y = 0; y < order; ++y) {
            if (p(y) != Complex(0.0)) s += p(y) * h(row[y]);
          }
          fn_acc[f * order + x] += std::abs(s - base);
        }
      }
    }
    if (k + 1 == schedule[next]) {
      double best = 0.0;
      for (const auto& b : blocks) {
        best = std::max(best, *std::max_element(b.acc.begin(), b.acc.end()));
      }
      if (!fn_acc.empty()) {
        best = std::max(best, *std::max_element(fn_acc.begin(), fn_acc.end()));
      }
      c.points.emplace_back(k + 1, best / static_cast<double>(k + 1));
      ++next;
    }
    if (!functions.empty()) power = convolve(power, mu);
  }

  const double last = c.points.back().second;
  const double prev = c.points.size() > 1 ? c.points[c.points.size() - 2].second : last;
  c.limit_estimate = std::max(0.0, 2.0 * last - prev);
  const double floor = opts.floor_factor * opts.threshold;
  if (c.limit_estimate < opts.threshold) {
    c.verdict = Empirical::Holds;
  } else if (c.limit_estimate > floor && stable_floor(c.points, floor)) {
    c.verdict = Empirical::Fails;
  } else {
    c.verdict = Empirical::Inconclusive;
  }
  return c;
}

namespace {

double max_column_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return m.colwise().norm().maxCoeff();
}

Eigen::MatrixXcd matrix_power(Eigen::MatrixXcd base, unsigned long n) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(base.rows(), base.cols());
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace

double strong_operator_power(const GroupMeasure& mu, unsigned long n) {
  double best = 0.0;
  for (const auto& [info, block] : nontrivial_blocks(mu)) {
    best = std::max(best, max_column_norm(matrix_power(block, n)));
  }
  return best;
}

double strong_operator_cesaro(const GroupMeasure& mu, unsigned long n) {
  double best = 0.0;
  for (const auto& [info, block] : nontrivial_blocks(mu)) {
    if (block.size() == 0) continue;
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(block.rows(), block.cols());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(block.rows(), block.cols());
    for (unsigned long k = 0; k < n; ++k) {
      sum += power;
      power = power * block;
    }
    best = std::max(best, max_column_norm(sum / static_cast<double>(n)));
  }
  return best;
}

std::vector<std::string> consistency_violations(const Verdict& v) {
  using Cond = std::optional<bool>;
  const auto tri = [](TriState s) -> Cond {
    if (s == TriState::Indeterminate) return std::nullopt;
    return s == TriState::Holds;
  };
  const auto emp = [](Empirical e) -> Cond {
    if (e == Empirical::Inconclusive) return std::nullopt;
    return e == Empirical::Holds;
  };
  const Cond e = emp(v.empirical_ergodic.verdict);
  const Cond m = emp(v.empirical_mixing.verdict);
  const Cond wm = emp(v.weak_mixing_empirical.verdict);
  const Cond a = v.adapted.holds;
  const Cond asa = v.adapted.holds && v.strictly_aperiodic.holds;
  const Cond s = tri(v.s.state);
  const Cond sr = tri(v.sr.state);

  std::vector<std::string> out;
  const auto iff = [&out](const Cond& x, const Cond& y, const char* what) {
    if (x && y && *x != *y) out.emplace_back(what);
  };
  const auto implies = [&out](const Cond& x, const Cond& y, const char* what) {
    if (x && y && *x && !*y) out.emplace_back(what);
  };
  iff(e, a, "(E) <=> (A)");
  iff(a, s, "(A) <=> (S)");
  iff(e, s, "(E) <=> (S)");
  iff(m, asa, "(M) <=> (ASA)");
  iff(asa, sr, "(ASA) <=> (SR)");
  iff(m, sr, "(M) <=> (SR)");
  iff(wm, m, "weak mixing <=> (M)");
  implies(sr, s, "(SR) => (S)");
  implies(e, a, "(E) => (A)");
  implies(m, asa, "(M) => (ASA)");
  return out;
}

Verdict classify(const GroupMeasure& mu, const ClassifyOptions& opts) {
  require_probability(mu);
  Verdict v;
  v.sr = check_sr(mu, opts.spectral);
  v.s = check_s(mu, opts.spectral);
  v.adapted = adapted(mu);
  v.strictly_aperiodic = strictly_aperiodic_check(mu);
  v.empirical_mixing = empirical_mixing(mu, opts.mixing_n_max, opts.mixing_threshold);
  v.empirical_ergodic =
      empirical_ergodic(mu, opts.ergodic_n_max, opts.ergodic_threshold);
  v.weak_mixing_empirical = empirical_weak_mixing(mu, opts.weak_mixing);
  v.consistency = consistency_violations(v);
  return v;
}

std::vector<std::string> cross_check(const GroupMeasure& mu,
                                     const ClassifyOptions& opts) {
  return classify(mu, opts).consistency;
}

}  // namespace motionwalk
