#include "motionwalk/rosenblatt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "motionwalk/errors.hpp"

namespace motionwalk {

namespace {

using Complex = std::complex<double>;

IntMatrix2 identity2() { return {{{1, 0}, {0, 1}}}; }

IntMatrix2 mat_mul(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    }
  }
  return out;
}

ZVector row_times_int(const ZVector& row, const IntMatrix2& m) {
  return {mpz_class(row[0] * m[0][0] + row[1] * m[1][0]),
          mpz_class(row[0] * m[0][1] + row[1] * m[1][1])};
}

long to_long(const mpz_class& k) {
  if (!k.fits_slong_p()) throw Overflow("rosenblatt: exponent out of range");
  return k.get_si();
}

Complex unit_phase(const QSqrt5& exponent) {
  return std::polar(1.0, 2.0 * std::numbers::pi * exponent.frac());
}

const std::array<ZVector, 3>& phase_vectors() {
  static const std::array<ZVector, 3> v = [] {
    const auto mu = rosenblatt_measure();
    // b, bc, c^2 carry the nontrivial translations.
    return std::array<ZVector, 3>{ZVector{mu[1].first.n1, mu[1].first.n2},
                                  ZVector{mu[2].first.n1, mu[2].first.n2},
                                  ZVector{mu[3].first.n1, mu[3].first.n2}};
  }();
  return v;
}

// Exact exponents t Gamma^-m v. Uses lambda^m (t . v) when t is a left
// eigenvector of Gamma^-1, else the integer matrix power.
class PhaseSource {
 public:
  explicit PhaseSource(const QVector& t) : t_(t) {
    const QVector image = row_times(t, gamma_power(-1));
    const QSqrt5 root = QSqrt5::sqrt5();
    for (const QSqrt5& lam : {root - QSqrt5(2), -root - QSqrt5(2)}) {
      if (image[0] == lam * t[0] && image[1] == lam * t[1]) {
        lambda_ = lam;
        break;
      }
    }
  }

  QSqrt5 exponent(long m, const ZVector& v) const {
    if (lambda_) return lambda_->pow(m) * dot(t_, v);
    return dot(row_times(t_, gamma_power(-m)), v);
  }

  Complex phase(long m, const ZVector& v) const {
    return unit_phase(exponent(m, v));
  }

 private:
  QVector t_;
  std::optional<QSqrt5> lambda_;
};

// A(m) and B(m) of the recurrence.
std::pair<Complex, Complex> coefficients(const PhaseSource& src, long m) {
  const auto& v = phase_vectors();
  const Complex a = 1.0 + src.phase(m, v[0]);
  const Complex b = src.phase(m, v[1]) + src.phase(m, v[2]);
  return {a, b};
}

}  // namespace

bool operator<(const ZElem& x, const ZElem& y) {
  if (x.k != y.k) return x.k < y.k;
  if (x.n1 != y.n1) return x.n1 < y.n1;
  return x.n2 < y.n2;
}

IntMatrix2 gamma_power(long e) {
  const IntMatrix2 gamma{{{1, 2}, {2, 3}}};
  const IntMatrix2 gamma_inv{{{-3, 2}, {2, -1}}};
  IntMatrix2 base = e < 0 ? gamma_inv : gamma;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  IntMatrix2 acc = identity2();
  while (k != 0) {
    if (k & 1UL) acc = mat_mul(acc, base);
    k >>= 1;
    if (k != 0) base = mat_mul(base, base);
  }
  return acc;
}

ZElem z_multiply(const ZElem& x, const ZElem& y) {
  const ZVector moved = row_times_int({y.n1, y.n2}, gamma_power(to_long(x.k)));
  return {x.n1 + moved[0], x.n2 + moved[1], x.k + y.k};
}

ZElem z_inverse(const ZElem& x) {
  const ZVector moved = row_times_int({x.n1, x.n2}, gamma_power(-to_long(x.k)));
  return {-moved[0], -moved[1], -x.k};
}

ZElem z_identity() { return {0, 0, 0}; }

std::vector<std::pair<ZElem, double>> rosenblatt_measure() {
  const ZElem a{0, 0, 1};
  const ZElem b{1, 2, 1};
  const ZElem c{2, 3, 1};
  return {{a, 0.25}, {b, 0.25}, {z_multiply(b, c), 0.25}, {z_multiply(c, c), 0.25}};
}

EigenParameter eigen_parameter() {
  EigenParameter out;
  out.lambda = QSqrt5::sqrt5() - QSqrt5(2);
  // First column of t Gamma^-1 = lambda t: -3 t1 + 2 t2 = lambda t1.
  out.t[0] = QSqrt5(1);
  out.t[1] = (QSqrt5(3) + out.lambda) / QSqrt5(2);
  return out;
}

QVector row_times(const QVector& row, const IntMatrix2& m) {
  const auto q = [](const mpz_class& z) { return QSqrt5(mpq_class(z)); };
  return {row[0] * q(m[0][0]) + row[1] * q(m[1][0]),
          row[0] * q(m[0][1]) + row[1] * q(m[1][1])};
}

QSqrt5 dot(const QVector& row, const ZVector& v) {
  return row[0] * QSqrt5(mpq_class(v[0])) + row[1] * QSqrt5(mpq_class(v[1]));
}

std::complex<double> WindowVector::at(long m) const {
  if (m < offset || m >= end()) return 0.0;
  return values(m - offset);
}

WindowVector indicator_window(long n) {
  WindowVector w;
  w.offset = 0;
  w.values = Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  return w;
}

WindowVector apply_lambda_mu(const QVector& t, const WindowVector& phi) {
  const PhaseSource src(t);
  WindowVector out;
  out.offset = phi.offset + 1;
  out.values = Eigen::VectorXcd::Zero(phi.values.size() + 1);
  for (long m = out.offset; m < out.end(); ++m) {
    const auto [a, b] = coefficients(src, m);
    out.values(m - out.offset) = 0.25 * (a * phi.at(m - 1) + b * phi.at(m - 2));
  }
  return out;
}

WindowVector apply_element(const QVector& t, const ZElem& x,
                           const WindowVector& phi) {
  const long k = to_long(x.k);
  const ZVector n{x.n1, x.n2};
  WindowVector out;
  out.offset = phi.offset + k;
  out.values.resize(phi.values.size());
  for (long m = out.offset; m < out.end(); ++m) {
    const QSqrt5 e = dot(row_times(t, gamma_power(-m)), n);
    out.values(m - out.offset) = unit_phase(e) * phi.at(m - k);
  }
  return out;
}

namespace {

WindowVector add_scaled(const WindowVector& x, const WindowVector& y,
                        Complex scale) {
  if (x.values.size() == 0) {
    WindowVector out = y;
    out.values *= scale;
    return out;
  }
  WindowVector out;
  out.offset = std::min(x.offset, y.offset);
  const long stop = std::max(x.end(), y.end());
  out.values.resize(stop - out.offset);
  for (long m = out.offset; m < stop; ++m) {
    out.values(m - out.offset) = x.at(m) + scale * y.at(m);
  }
  return out;
}

}  // namespace

WindowVector apply_lambda_mu_direct(const QVector& t, const WindowVector& phi) {
  WindowVector acc;
  for (const auto& [x, w] : rosenblatt_measure()) {
    acc = add_scaled(acc, apply_element(t, x, phi), w);
  }
  return acc;
}

WindowVector subtract(const WindowVector& x, const WindowVector& y) {
  return add_scaled(x, y, -1.0);
}

DefectNorm defect_norm(const QVector& t, long n) {
  if (n < 3) throw std::invalid_argument("defect_norm: n must be at least 3");
  DefectNorm out;
  const WindowVector phi = indicator_window(n);
  out.direct = subtract(apply_lambda_mu(t, phi), phi).values.squaredNorm();

  const PhaseSource src(t);
  double sum = std::norm(coefficients(src, 1).first - 4.0);
  sum += std::norm(coefficients(src, n + 1).second);
  {
    const auto [a, b] = coefficients(src, n);
    sum += std::norm(a + b);
  }
  for (long j = 2; j <= n - 1; ++j) {
    const auto [a, b] = coefficients(src, j);
    sum += std::norm(a + b - 4.0);
  }
  const double dn = static_cast<double>(n);
  out.closed_form = 1.0 / dn + sum / (16.0 * dn);
  return out;
}

namespace {

struct Search {
  std::size_t budget;
  std::size_t visited = 0;
};

// Breadth-first over the moves; returns the depth at which every target
// has been seen, or -1 if max_depth is exhausted first.
template <typename Moves>
int bfs_targets(const Moves& moves, int max_depth, Search& budget) {
  const std::array<ZElem, 3> targets{ZElem{1, 0, 0}, ZElem{0, 1, 0},
                                     ZElem{0, 0, 1}};
  std::set<ZElem> seen{z_identity()};
  std::vector<ZElem> frontier{z_identity()};
  const auto all_found = [&] {
    for (const auto& x : targets) {
      if (seen.count(x) == 0) return false;
    }
    return true;
  };
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<ZElem> next;
    for (const auto& x : frontier) {
      for (const auto& y : moves(x)) {
        if (seen.insert(y).second) {
          next.push_back(y);
          if (++budget.visited > budget.budget) {
            throw BudgetExceeded("aperiodicity_witness: node budget exhausted");
          }
        }
      }
    }
    if (all_found()) return depth;
    if (next.empty()) return -1;
    frontier = std::move(next);
  }
  return -1;
}

}  // namespace

WitnessSearch witness_search(int max_word_length, std::size_t node_budget) {
  if (max_word_length < 1) {
    throw std::invalid_argument("aperiodicity_witness: max_word_length must be >= 1");
  }
  std::vector<ZElem> supp;
  for (const auto& atom : rosenblatt_measure()) supp.push_back(atom.first);
  std::vector<ZElem> symmetric = supp;
  for (const auto& s : supp) symmetric.push_back(z_inverse(s));

  std::vector<ZElem> differences;
  const ZElem s0_inv = z_inverse(supp.front());
  for (std::size_t i = 1; i < supp.size(); ++i) {
    const ZElem d = z_multiply(s0_inv, supp[i]);
    differences.push_back(d);
    differences.push_back(z_inverse(d));
  }

  Search budget{node_budget};
  WitnessSearch out;

  out.adapted_depth = bfs_targets(
      [&](const ZElem& x) {
        std::vector<ZElem> ys;
        for (const auto& s : symmetric) ys.push_back(z_multiply(x, s));
        return ys;
      },
      max_word_length, budget);
  out.adapted = out.adapted_depth >= 0;

  out.aperiodic_depth = bfs_targets(
      [&](const ZElem& x) {
        std::vector<ZElem> ys;
        for (const auto& d : differences) ys.push_back(z_multiply(x, d));
        for (const auto& s : symmetric) {
          ys.push_back(z_multiply(z_multiply(s, x), z_inverse(s)));
        }
        return ys;
      },
      max_word_length, budget);
  out.strictly_aperiodic = out.aperiodic_depth >= 0;
  out.nodes = budget.visited;
  return out;
}

bool aperiodicity_witness(int max_word_length) {
  const auto w = witness_search(max_word_length);
  return w.adapted && w.strictly_aperiodic;
}

}  // namespace motionwalk
