#include "motionwalk/qsqrt5.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace motionwalk {

QSqrt5::QSqrt5(mpq_class x, mpq_class y) : x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

mpq_class QSqrt5::norm() const { return mpq_class(x_ * x_ - 5 * y_ * y_); }

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  mpq_class x = x_ * o.x_ + 5 * y_ * o.y_;
  mpq_class y = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  const mpq_class n = o.norm();
  if (n == 0) throw std::domain_error("QSqrt5: division by zero");
  *this *= o.conj();
  x_ /= n;
  y_ /= n;
  return *this;
}

QSqrt5 QSqrt5::pow(long e) const {
  QSqrt5 base = e < 0 ? QSqrt5(1) / *this : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  QSqrt5 acc(1);
  while (k != 0) {
    if (k & 1UL) acc *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return acc;
}

namespace {

// Evaluates x + y sqrt 5 with relative precision about 2^-bits. When the
// two terms cancel, the conjugate x - y sqrt 5 does not, and
// q = norm / conj avoids the loss.
mpf_class evaluate(const mpq_class& x, const mpq_class& y, mp_bitcnt_t bits) {
  const mpf_class root = sqrt(mpf_class(5, bits));
  const int sx = sgn(x);
  const int sy = sgn(y);
  if (sx * sy >= 0) {
    return mpf_class(mpf_class(x, bits) + mpf_class(y, bits) * root, bits);
  }
  const mpq_class n = x * x - 5 * y * y;
  const mpf_class conj(mpf_class(x, bits) - mpf_class(y, bits) * root, bits);
  return mpf_class(mpf_class(n, bits) / conj, bits);
}

long binary_exponent(const mpf_class& v) {
  long e = 0;
  mpf_get_d_2exp(&e, v.get_mpf_t());
  return e;
}

}  // namespace

double QSqrt5::to_double() const {
  if (is_zero()) return 0.0;
  return evaluate(x_, y_, 128).get_d();
}

double QSqrt5::frac() const {
  if (is_zero()) return 0.0;
  const long e = binary_exponent(evaluate(x_, y_, 64));
  const auto bits = static_cast<mp_bitcnt_t>(std::max(0L, e) + 160);
  const mpf_class v = evaluate(x_, y_, bits);
  mpf_class f(v - floor(v), bits);
  double out = f.get_d();
  // Rounding can land exactly on 1.
  if (out >= 1.0) out = 0.0;
  return out;
}

std::string QSqrt5::str() const {
  return x_.get_str() + " + " + y_.get_str() + "*sqrt(5)";
}

}  // namespace motionwalk
