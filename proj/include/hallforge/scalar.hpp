#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"

namespace hallforge {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Element a + b*sqrt(q) of Q(sqrt(q)).
///
/// q == 0 marks a plain rational that has not been tied to a field yet; it
/// adopts the q of whatever it is combined with.  Mixing two different
/// nonzero q values throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational a, Rational b = 0, int q = 0);

  static Scalar rational(const Rational& a, int q = 0) { return Scalar(a, 0, q); }
  static Scalar integer(const BigInt& n, int q = 0) { return Scalar(Rational(n), 0, q); }
  /// v = sqrt(q).
  static Scalar v(int q) { return Scalar(0, 1, q); }
  /// v^n for any integer n.
  static Scalar v_pow(long n, int q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int q() const { return q_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);

  Scalar inverse() const;
  Scalar pow(long n) const;

  std::string to_string() const;

 private:
  int merged_q(const Scalar& o) const;

  Rational a_;
  Rational b_;
  int q_ = 0;
};

void to_json(nlohmann::json& j, const Scalar& s);
void from_json(const nlohmann::json& j, Scalar& s);

}  // namespace hallforge
