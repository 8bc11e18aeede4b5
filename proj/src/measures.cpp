#include "motionwalk/measures.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "motionwalk/errors.hpp"

namespace motionwalk {

namespace {

void require_same_group(const MotionGroup& a, const MotionGroup& b) {
  if (!(a == b)) throw GroupMismatch("measures live on different groups");
}

}  // namespace

GroupMeasure::GroupMeasure(MotionGroup group, Eigen::VectorXcd weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
  if (static_cast<std::size_t>(weights_.size()) != group_.order()) {
    throw GroupMismatch("weight vector has length " +
                        std::to_string(weights_.size()) + ", group order is " +
                        std::to_string(group_.order()));
  }
}

GroupMeasure GroupMeasure::zero(const MotionGroup& g) {
  return GroupMeasure(g, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.order())));
}

GroupMeasure GroupMeasure::point_mass(const MotionGroup& g, std::size_t index) {
  auto mu = zero(g);
  mu.weights_(static_cast<Eigen::Index>(index)) = 1.0;
  return mu;
}

GroupMeasure GroupMeasure::point_mass(const MotionGroup& g, const GElem& x) {
  return point_mass(g, g.index_of(x));
}

GroupMeasure GroupMeasure::uniform(const MotionGroup& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  return GroupMeasure(g, Eigen::VectorXcd::Constant(n, 1.0 / static_cast<double>(n)));
}

std::vector<std::size_t> GroupMeasure::support() const {
  std::vector<std::size_t> s;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (weights_(i) != Complex(0.0)) s.push_back(static_cast<std::size_t>(i));
  }
  return s;
}

GroupMeasure GroupMeasure::conj() const {
  return GroupMeasure(group_, weights_.conjugate());
}

GroupMeasure& GroupMeasure::operator+=(const GroupMeasure& other) {
  require_same_group(group_, other.group_);
  weights_ += other.weights_;
  return *this;
}

GroupMeasure& GroupMeasure::operator-=(const GroupMeasure& other) {
  require_same_group(group_, other.group_);
  weights_ -= other.weights_;
  return *this;
}

GroupMeasure& GroupMeasure::operator*=(Complex s) {
  weights_ *= s;
  return *this;
}

GroupMeasure operator+(GroupMeasure lhs, const GroupMeasure& rhs) {
  return lhs += rhs;
}
GroupMeasure operator-(GroupMeasure lhs, const GroupMeasure& rhs) {
  return lhs -= rhs;
}
GroupMeasure operator*(Complex s, GroupMeasure mu) { return mu *= s; }

GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu) {
  require_same_group(mu.group(), nu.group());
  const auto& g = mu.group();
  const std::size_t n = g.order();
  const auto& table = g.product_table();
  const auto& a = mu.weights();
  const auto& b = nu.weights();
  std::vector<std::size_t> nz_b;
  for (std::size_t z = 0; z < n; ++z) {
    if (b(z) != Complex(0.0)) nz_b.push_back(z);
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t y = 0; y < n; ++y) {
    const Complex ay = a(y);
    if (ay == Complex(0.0)) continue;
    const std::uint32_t* row = table.data() + y * n;
    for (std::size_t z : nz_b) out(row[z]) += ay * b(z);
  }
  return GroupMeasure(g, std::move(out));
}

GroupMeasure convolution_power(const GroupMeasure& mu, unsigned long n) {
  GroupMeasure result = GroupMeasure::point_mass(mu.group(), 0);
  GroupMeasure base = mu;
  bool first = true;
  while (n > 0) {
    if (n & 1UL) {
      result = first ? base : convolve(result, base);
      first = false;
    }
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return result;
}

KMeasure convolve(const KMeasure& mu, const KMeasure& nu) {
  require_same_group(mu.group, nu.group);
  const auto& k = mu.group.k_group();
  const int m = k.order();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out(k.mul(i, j)) += mu.weights(i) * nu.weights(j);
  }
  return KMeasure{mu.group, std::move(out)};
}

double tv_norm(const GroupMeasure& mu) { return mu.weights().cwiseAbs().sum(); }

KMeasure push_k(const GroupMeasure& mu) {
  const auto& g = mu.group();
  const int m = g.k_order();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m);
  for (std::size_t x = 0; x < g.order(); ++x) {
    out(static_cast<Eigen::Index>(x % m)) += mu[x];
  }
  return KMeasure{g, std::move(out)};
}

GroupMeasure central_measure(const MotionGroup& g,
                             const std::vector<Character>& s) {
  std::set<std::size_t> members;
  for (const auto& alpha : s) {
    if (alpha.is_zero()) {
      throw ContainsZeroCharacter("central_measure: 0 is in the character set");
    }
    members.insert(g.a_index(alpha.alpha));
  }
  for (std::size_t alpha : members) {
    for (int k = 0; k < g.k_order(); ++k) {
      if (!members.count(g.dual_act(k, alpha))) {
        throw NotOrbitClosed("central_measure: character set is not a union "
                             "of dual orbits");
      }
    }
  }
  // h(a) = |A|^-1 sum_{beta in s} <a, beta>
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.order()));
  const double scale = 1.0 / static_cast<double>(g.a_order());
  const auto m = static_cast<std::size_t>(g.k_order());
  for (std::size_t a = 0; a < g.a_order(); ++a) {
    Complex h = 0.0;
    for (std::size_t beta : members) h += g.pairing(a, beta);
    w(static_cast<Eigen::Index>(a * m)) = scale * h;
  }
  return GroupMeasure(g, std::move(w));
}

std::vector<GroupMeasure> mean_zero_basis(const MotionGroup& g) {
  std::vector<GroupMeasure> basis;
  basis.reserve(g.order() - 1);
  const auto e = GroupMeasure::point_mass(g, 0);
  for (std::size_t x = 1; x < g.order(); ++x) {
    basis.push_back(GroupMeasure::point_mass(g, x) - e);
  }
  return basis;
}

bool is_probability(const GroupMeasure& mu, double tol) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < mu.weights().size(); ++i) {
    const Complex w = mu.weights()(i);
    if (std::abs(w.imag()) > tol || w.real() < -tol) return false;
    sum += w.real();
  }
  return std::abs(sum - 1.0) <= tol;
}

void require_probability(const GroupMeasure& mu) {
  if (!is_probability(mu)) {
    throw NotProbability("measure is not a probability measure (weights must "
                         "be real, nonnegative and sum to 1)");
  }
}

}  // namespace motionwalk
