#include "hallforge/qcomb.hpp"

#include "hallforge/error.hpp"

namespace hallforge {

Scalar qint(long r, int q) {
  if (r < 0) return -qint(-r, q);
  Scalar sum = Scalar::rational(0, q);
  for (long k = 0; k < r; ++k) sum += Scalar::v_pow(r - 1 - 2 * k, q);
  return sum;
}

Scalar qfact(long r, int q) {
  if (r < 0) throw DomainError("qfact of a negative integer");
  Scalar p = Scalar::rational(1, q);
  for (long i = 1; i <= r; ++i) p *= qint(i, q);
  return p;
}

Scalar qbinom(long m, long r, int q) {
  if (r < 0) throw DomainError("qbinom with negative lower index");
  if (m >= 0 && r > m) return Scalar::rational(0, q);
  Scalar num = Scalar::rational(1, q);
  for (long i = 0; i < r; ++i) num *= qint(m - i, q);
  return num / qfact(r, q);
}

Scalar phi(long r, int q) {
  if (r < 0) throw DomainError("phi of a negative integer");
  BigInt p = 1;
  for (long k = 1; k <= r; ++k) p *= BigInt(1) - int_pow(q, k);
  return Scalar::integer(p, q);
}

Scalar tau(long r, int q) { return phi(r, q).inverse(); }

Scalar grassmannian_size(long s, long u, int q) {
  if (s < 0 || s > u) return Scalar::rational(0, q);
  return Scalar::v_pow((u - s) * s, q) * qbinom(u, s, q);
}

BigInt int_pow(long base, long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

BigInt gl_size(long r, int q) {
  BigInt p = 1;
  BigInt qr = int_pow(q, r);
  for (long k = 0; k < r; ++k) p *= qr - int_pow(q, k);
  return p;
}

}  // namespace hallforge
