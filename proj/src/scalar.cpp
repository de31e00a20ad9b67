#include "hallforge/scalar.hpp"

#include "hallforge/error.hpp"

namespace hallforge {

Scalar::Scalar(Rational a, Rational b, int q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && q_ == 0) throw DomainError("irrational scalar needs a field parameter q");
}

Scalar Scalar::v_pow(long n, int q) {
  if (q <= 0) throw DomainError("v_pow needs q > 0");
  long k = n >= 0 ? n / 2 : -((-n + 1) / 2);  // floor(n/2)
  bool odd = (n - 2 * k) != 0;
  BigInt qk;
  mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k >= 0 ? k : -k));
  Rational c = k >= 0 ? Rational(qk) : Rational(1) / Rational(qk);
  return odd ? Scalar(0, c, q) : Scalar(c, 0, q);
}

int Scalar::merged_q(const Scalar& o) const {
  if (q_ == 0) return o.q_;
  if (o.q_ == 0 || o.q_ == q_) return q_;
  throw DomainError("scalars over different fields Q(sqrt " + std::to_string(q_) + ") and Q(sqrt " +
                    std::to_string(o.q_) + ")");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ = merged_q(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  q_ = merged_q(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int q = merged_q(o);
  Rational a = a_ * o.a_;
  if (sgn(b_) != 0 && sgn(o.b_) != 0) a += Rational(q) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  q_ = q;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero scalar");
  if (sgn(b_) == 0) return Scalar(Rational(1) / a_, 0, q_);
  Rational norm = a_ * a_ - Rational(q_) * b_ * b_;
  return Scalar(a_ / norm, -b_ / norm, q_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (sgn(x.b_) != 0 && x.q_ != y.q_) return false;
  return true;
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(Rational(1), 0, q_);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return s + b_.get_str() + "*sqrt(" + std::to_string(q_) + ")";
}

void to_json(nlohmann::json& j, const Scalar& s) {
  auto frac = [](const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); };
  j = nlohmann::json{{"a", frac(s.a())}, {"b", frac(s.b())}, {"q", s.q()}};
}

void from_json(const nlohmann::json& j, Scalar& s) {
  auto parse = [](const nlohmann::json& x) {
    if (x.is_number_integer()) return Rational(x.get<long>());
    Rational r;
    if (r.set_str(x.get<std::string>(), 10) != 0) throw ConfigError("bad rational: " + x.dump());
    r.canonicalize();
    return r;
  };
  if (j.is_number_integer()) {
    s = Scalar(j.get<long>());
    return;
  }
  int q = j.value("q", 0);
  s = Scalar(parse(j.at("a")), j.contains("b") ? parse(j.at("b")) : Rational(0), q);
}

}  // namespace hallforge
