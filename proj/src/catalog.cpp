#include "motionwalk/catalog.hpp"

#include <deque>
#include <stdexcept>

#include "motionwalk/errors.hpp"

namespace motionwalk::catalog {

IndexTable trivial_table() { return {{0}}; }

IndexTable cyclic_table(int m) {
  IndexTable t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
  }
  return t;
}

IndexTable dihedral_table(int m) {
  const int order = 2 * m;
  IndexTable t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int f1 = x / m, i1 = x % m, f2 = y / m, i2 = y % m;
      // s^f1 r^i1 s^f2 r^i2 = s^(f1+f2) r^((-1)^f2 i1 + i2)
      const int i = ((f2 ? -i1 : i1) + i2 + m) % m;
      t[x][y] = ((f1 + f2) % 2) * m + i;
    }
  }
  return t;
}

IndexTable direct_product(const IndexTable& t1, const IndexTable& t2) {
  const int n1 = static_cast<int>(t1.size());
  const int n2 = static_cast<int>(t2.size());
  IndexTable t(n1 * n2, std::vector<int>(n1 * n2));
  for (int x = 0; x < n1 * n2; ++x) {
    for (int y = 0; y < n1 * n2; ++y) {
      t[x][y] = t1[x / n2][y / n2] * n2 + t2[x % n2][y % n2];
    }
  }
  return t;
}

std::vector<Eigen::MatrixXi> action_from_generators(
    const IndexTable& table, const std::vector<int>& generators,
    const std::vector<Eigen::MatrixXi>& images, int modulus) {
  if (generators.size() != images.size() || images.empty()) {
    throw NotAHomomorphism("action_from_generators: generator/image mismatch");
  }
  const int rank = static_cast<int>(images.front().rows());
  const auto reduce = [modulus](Eigen::MatrixXi m) {
    return m.unaryExpr([modulus](int v) { return ((v % modulus) + modulus) % modulus; })
        .eval();
  };
  std::vector<Eigen::MatrixXi> out(table.size());
  std::vector<bool> done(table.size(), false);
  out[0] = Eigen::MatrixXi::Identity(rank, rank);
  done[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const int y = table[x][generators[i]];
      if (done[y]) continue;
      out[y] = reduce(out[x] * images[i]);
      done[y] = true;
      queue.push_back(y);
    }
  }
  for (bool d : done) {
    if (!d) throw NotAHomomorphism("action_from_generators: generators do not span K");
  }
  return out;
}

std::vector<Eigen::MatrixXi> trivial_action(int k_order, int rank) {
  return std::vector<Eigen::MatrixXi>(k_order, Eigen::MatrixXi::Identity(rank, rank));
}

MotionGroup dihedral_group(int n) {
  Eigen::MatrixXi neg(1, 1);
  neg << n - 1;
  return build_motion_group(n, 1, cyclic_table(2),
                            {Eigen::MatrixXi::Identity(1, 1), neg});
}

MotionGroup order10_group() { return dihedral_group(5); }

MotionGroup abelian_group(int modulus, int rank) {
  return build_motion_group(modulus, rank, trivial_table(), trivial_action(1, rank));
}

MotionGroup unit_group(int modulus, int unit, int m) {
  const auto table = cyclic_table(m);
  Eigen::MatrixXi u(1, 1);
  u << unit % modulus;
  return build_motion_group(modulus, 1, table,
                            action_from_generators(table, {m > 1 ? 1 : 0}, {u}, modulus));
}

}  // namespace motionwalk::catalog
