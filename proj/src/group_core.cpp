#include "motionwalk/group_core.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "motionwalk/errors.hpp"

namespace motionwalk {

namespace {

int mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

Eigen::MatrixXi reduce(const Eigen::MatrixXi& m, int n) {
  return m.unaryExpr([n](int v) { return mod(v, n); });
}

Eigen::MatrixXi mul_mod(const Eigen::MatrixXi& x, const Eigen::MatrixXi& y,
                        int n) {
  Eigen::MatrixXi out(x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      long long s = 0;
      for (Eigen::Index l = 0; l < x.cols(); ++l) {
        s += static_cast<long long>(x(i, l)) * y(l, j);
      }
      out(i, j) = mod(s, n);
    }
  }
  return out;
}

void validate_table(const IndexTable& table) {
  const auto m = table.size();
  if (m == 0) throw NotAGroupTable("K table is empty");
  for (const auto& row : table) {
    if (row.size() != m) throw NotAGroupTable("K table is not square");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= m) {
        throw NotAGroupTable("K table entry out of range: " +
                             std::to_string(v));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (table[0][i] != static_cast<int>(i) ||
        table[i][0] != static_cast<int>(i)) {
      throw NotAGroupTable("index 0 is not the identity");
    }
  }
  // Latin square: every row and column is a permutation.
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<char> row_seen(m, 0), col_seen(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (row_seen[table[i][j]]++ || col_seen[table[j][i]]++) {
        throw NotAGroupTable("K table row/column " + std::to_string(i) +
                             " is not a permutation");
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < m; ++l) {
        if (table[table[i][j]][l] != table[i][table[j][l]]) {
          throw NotAGroupTable("K table is not associative at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(l) + ")");
        }
      }
    }
  }
}

}  // namespace

long long det_mod(const Eigen::MatrixXi& m, int modulus) {
  const auto d = m.rows();
  if (d == 0) return mod(1, modulus);
  if (d == 1) return mod(m(0, 0), modulus);
  long long det = 0;
  for (Eigen::Index c = 0; c < d; ++c) {
    Eigen::MatrixXi minor(d - 1, d - 1);
    for (Eigen::Index i = 1; i < d; ++i) {
      for (Eigen::Index j = 0, jj = 0; j < d; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    const long long term = mod(m(0, c), modulus) * det_mod(minor, modulus);
    det = mod(det + ((c % 2 == 0) ? term : -term), modulus);
  }
  return det;
}

std::size_t AbelianGroup::order() const {
  std::size_t s = 1;
  for (int i = 0; i < rank; ++i) s *= static_cast<std::size_t>(modulus);
  return s;
}

bool Character::is_zero() const {
  return std::all_of(alpha.begin(), alpha.end(), [](int v) { return v == 0; });
}

struct MotionGroup::Impl {
  AbelianGroup abelian;
  KGroup k;
  std::size_t a_order = 0;
  std::vector<Coords> a_coords;                 // by a-index
  std::vector<std::vector<std::uint32_t>> act;  // [k][a] -> phi_k(a)
  std::vector<std::vector<std::uint32_t>> dual; // [k][alpha] -> phi_k(alpha)
  std::vector<Complex> roots;                   // exp(2 pi i j / n)

  mutable std::once_flag table_once;
  mutable std::vector<std::uint32_t> product_table;

  std::size_t a_index(const Coords& a) const {
    std::size_t idx = 0;
    for (int v : a) idx = idx * abelian.modulus + static_cast<std::size_t>(v);
    return idx;
  }

  // Digit-wise addition of base-n indices.
  std::size_t add(std::size_t x, std::size_t y) const {
    const auto n = static_cast<std::size_t>(abelian.modulus);
    std::size_t out = 0, scale = 1;
    for (int j = 0; j < abelian.rank; ++j) {
      out += ((x % n + y % n) % n) * scale;
      x /= n;
      y /= n;
      scale *= n;
    }
    return out;
  }

  std::size_t product(std::size_t x, std::size_t y) const {
    const auto m = static_cast<std::size_t>(k.order());
    const std::size_t ax = x / m, ay = y / m;
    const int kx = static_cast<int>(x % m), ky = static_cast<int>(y % m);
    const std::size_t a = add(ax, act[kx][ay]);
    return a * m + static_cast<std::size_t>(k.mul(kx, ky));
  }
};

MotionGroup::MotionGroup(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

const AbelianGroup& MotionGroup::abelian() const { return impl_->abelian; }
const KGroup& MotionGroup::k_group() const { return impl_->k; }
std::size_t MotionGroup::a_order() const { return impl_->a_order; }
int MotionGroup::k_order() const { return impl_->k.order(); }
std::size_t MotionGroup::order() const {
  return impl_->a_order * static_cast<std::size_t>(k_order());
}

std::size_t MotionGroup::a_index(const Coords& a) const {
  return impl_->a_index(a);
}
Coords MotionGroup::a_coords(std::size_t a_index) const {
  return impl_->a_coords[a_index];
}

std::size_t MotionGroup::index_of(const GElem& x) const {
  return impl_->a_index(x.a) * static_cast<std::size_t>(k_order()) +
         static_cast<std::size_t>(x.k);
}

GElem MotionGroup::element(std::size_t index) const {
  const auto m = static_cast<std::size_t>(k_order());
  return GElem{impl_->a_coords[index / m], static_cast<int>(index % m)};
}

std::size_t MotionGroup::product(std::size_t x, std::size_t y) const {
  return product_table()[x * order() + y];
}

std::size_t MotionGroup::inverse(std::size_t x) const {
  // (a, k)^-1 = (phi_{k^-1}(-a), k^-1)
  const auto m = static_cast<std::size_t>(k_order());
  const auto& im = *impl_;
  const int ki = im.k.inv(static_cast<int>(x % m));
  Coords neg = im.a_coords[x / m];
  for (int& v : neg) v = mod(-v, im.abelian.modulus);
  return im.act[ki][im.a_index(neg)] * m + static_cast<std::size_t>(ki);
}

const std::vector<std::uint32_t>& MotionGroup::product_table() const {
  const auto& im = *impl_;
  std::call_once(im.table_once, [&im, n = order()] {
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x * n + y] = static_cast<std::uint32_t>(im.product(x, y));
      }
    }
    im.product_table = std::move(t);
  });
  return im.product_table;
}

std::size_t MotionGroup::act(int k, std::size_t a_index) const {
  return impl_->act[k][a_index];
}

std::size_t MotionGroup::dual_act(int k, std::size_t alpha_index) const {
  return impl_->dual[k][alpha_index];
}

Complex MotionGroup::pairing(std::size_t a_index,
                             std::size_t alpha_index) const {
  const auto& a = impl_->a_coords[a_index];
  const auto& alpha = impl_->a_coords[alpha_index];
  long long dot = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    dot += static_cast<long long>(a[j]) * alpha[j];
  }
  return impl_->roots[mod(dot, impl_->abelian.modulus)];
}

bool MotionGroup::operator==(const MotionGroup& other) const {
  if (impl_ == other.impl_) return true;
  const auto& x = *impl_;
  const auto& y = *other.impl_;
  if (!(x.abelian == y.abelian) || x.k.table != y.k.table) return false;
  for (std::size_t i = 0; i < x.k.action.size(); ++i) {
    if (x.k.action[i] != y.k.action[i]) return false;
  }
  return true;
}

MotionGroup build_motion_group(int modulus, int rank, const IndexTable& table,
                               const std::vector<Eigen::MatrixXi>& action) {
  if (modulus < 1 || rank < 1) {
    throw NotAGroupTable("abelian part needs modulus >= 1 and rank >= 1");
  }
  validate_table(table);
  const int m = static_cast<int>(table.size());
  if (static_cast<int>(action.size()) != m) {
    throw NotAHomomorphism("expected " + std::to_string(m) +
                           " action matrices, got " +
                           std::to_string(action.size()));
  }

  auto impl = std::make_shared<MotionGroup::Impl>();
  impl->abelian = AbelianGroup{modulus, rank};
  impl->k.table = table;
  impl->k.inverses.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (table[i][j] == 0) impl->k.inverses[i] = j;
    }
  }

  for (int i = 0; i < m; ++i) {
    if (action[i].rows() != rank || action[i].cols() != rank) {
      throw NotAHomomorphism("action matrix " + std::to_string(i) +
                             " is not " + std::to_string(rank) + "x" +
                             std::to_string(rank));
    }
    impl->k.action.push_back(reduce(action[i], modulus));
    const long long det = det_mod(impl->k.action.back(), modulus);
    if (std::gcd(det, static_cast<long long>(modulus)) != 1) {
      throw NotInvertible("action matrix " + std::to_string(i) +
                          " has determinant " + std::to_string(det) +
                          " not coprime to " + std::to_string(modulus));
    }
  }
  const Eigen::MatrixXi id = reduce(Eigen::MatrixXi::Identity(rank, rank),
                                    modulus);
  if (impl->k.action[0] != id) {
    throw NotAHomomorphism("action of the identity is not the identity matrix");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (mul_mod(impl->k.action[i], impl->k.action[j], modulus) !=
          impl->k.action[table[i][j]]) {
        throw NotAHomomorphism("action[" + std::to_string(i) + "] * action[" +
                               std::to_string(j) + "] != action[" +
                               std::to_string(table[i][j]) + "] mod " +
                               std::to_string(modulus));
      }
    }
  }

  const std::size_t na = impl->abelian.order();
  impl->a_order = na;
  impl->a_coords.resize(na);
  for (std::size_t idx = 0; idx < na; ++idx) {
    Coords c(rank);
    std::size_t rest = idx;
    for (int j = rank - 1; j >= 0; --j) {
      c[j] = static_cast<int>(rest % modulus);
      rest /= modulus;
    }
    impl->a_coords[idx] = std::move(c);
  }

  impl->act.assign(m, std::vector<std::uint32_t>(na));
  impl->dual.assign(m, std::vector<std::uint32_t>(na));
  Eigen::VectorXi v(rank);
  for (int k = 0; k < m; ++k) {
    const auto& mk = impl->k.action[k];
    const auto& mkinv = impl->k.action[impl->k.inv(k)];
    for (std::size_t idx = 0; idx < na; ++idx) {
      for (int j = 0; j < rank; ++j) v(j) = impl->a_coords[idx][j];
      Coords image(rank), dual(rank);
      for (int r = 0; r < rank; ++r) {
        long long s = 0, t = 0;
        for (int c = 0; c < rank; ++c) {
          s += static_cast<long long>(mk(r, c)) * v(c);     // M_k a
          t += static_cast<long long>(v(c)) * mkinv(c, r);  // alpha M_{k^-1}
        }
        image[r] = mod(s, modulus);
        dual[r] = mod(t, modulus);
      }
      impl->act[k][idx] = static_cast<std::uint32_t>(impl->a_index(image));
      impl->dual[k][idx] = static_cast<std::uint32_t>(impl->a_index(dual));
    }
  }

  impl->roots.resize(modulus);
  for (int j = 0; j < modulus; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / modulus;
    impl->roots[j] = std::polar(1.0, theta);
  }
  // Exact values where they are exactly representable.
  impl->roots[0] = 1.0;
  if (modulus % 2 == 0) impl->roots[modulus / 2] = -1.0;
  if (modulus % 4 == 0) {
    impl->roots[modulus / 4] = Complex(0.0, 1.0);
    impl->roots[3 * modulus / 4] = Complex(0.0, -1.0);
  }

  return MotionGroup(std::move(impl));
}

GElem multiply(const MotionGroup& g, const GElem& x, const GElem& y) {
  // (a1, k1)(a2, k2) = (a1 + phi_k1(a2), k1 k2)
  const std::size_t a2 = g.act(x.k, g.a_index(y.a));
  Coords a = g.a_coords(a2);
  for (std::size_t j = 0; j < a.size(); ++j) {
    a[j] = (a[j] + x.a[j]) % g.modulus();
  }
  return GElem{std::move(a), g.k_group().mul(x.k, y.k)};
}

GElem inverse(const MotionGroup& g, const GElem& x) {
  return g.element(g.inverse(g.index_of(x)));
}

GElem identity(const MotionGroup& g) {
  return GElem{Coords(g.rank(), 0), 0};
}

Character dual_action(const MotionGroup& g, int k, const Character& alpha) {
  return Character{g.a_coords(g.dual_act(k, g.a_index(alpha.alpha)))};
}

Complex pairing(const MotionGroup& g, const Coords& a, const Character& alpha) {
  return g.pairing(g.a_index(a), g.a_index(alpha.alpha));
}

std::vector<DualOrbit> dual_orbits(const MotionGroup& g) {
  const std::size_t na = g.a_order();
  const int m = g.k_order();
  std::vector<char> seen(na, 0);
  std::vector<DualOrbit> orbits;
  for (std::size_t start = 0; start < na; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> members{start};
    seen[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (int k = 0; k < m; ++k) {
        const std::size_t next = g.dual_act(k, cur);
        if (!seen[next]) {
          seen[next] = 1;
          members.push_back(next);
          queue.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    DualOrbit orbit;
    orbit.representative = Character{g.a_coords(members.front())};
    for (auto idx : members) orbit.members.push_back(Character{g.a_coords(idx)});
    orbit.stabilizer_size = m / static_cast<int>(members.size());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace motionwalk
