#pragma once

// Exact arithmetic in Q(sqrt 5): x + y sqrt(5) with arbitrary-precision
// rational coefficients.

#include <string>

#include <gmpxx.h>

namespace motionwalk {

class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(mpq_class x, mpq_class y = 0);  // NOLINT(google-explicit-constructor)
  QSqrt5(long x) : QSqrt5(mpq_class(x), mpq_class(0)) {}  // NOLINT

  static QSqrt5 sqrt5() { return QSqrt5(0, 1); }

  const mpq_class& rational() const { return x_; }
  const mpq_class& irrational() const { return y_; }

  QSqrt5 conj() const { return QSqrt5(x_, -y_); }
  /// x^2 - 5 y^2, the field norm.
  mpq_class norm() const;
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);  // throws std::domain_error on 0
  QSqrt5 operator-() const { return QSqrt5(-x_, -y_); }

  friend QSqrt5 operator+(QSqrt5 a, const QSqrt5& b) { return a += b; }
  friend QSqrt5 operator-(QSqrt5 a, const QSqrt5& b) { return a -= b; }
  friend QSqrt5 operator*(QSqrt5 a, const QSqrt5& b) { return a *= b; }
  friend QSqrt5 operator/(QSqrt5 a, const QSqrt5& b) { return a /= b; }
  friend bool operator==(const QSqrt5& a, const QSqrt5& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

  QSqrt5 pow(long e) const;

  /// Nearest double. Large cancelling coefficients are handled through
  /// q = norm(q) / conj(q).
  double to_double() const;
  /// q - floor(q) in [0, 1), evaluated with enough working precision that
  /// the result is accurate to double precision.
  double frac() const;

  /// "x + y*sqrt(5)" with rationals printed as p/q.
  std::string str() const;

 private:
  mpq_class x_ = 0;
  mpq_class y_ = 0;
};

}  // namespace motionwalk
