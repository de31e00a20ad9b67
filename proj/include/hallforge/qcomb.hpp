#pragma once

#include "hallforge/scalar.hpp"

namespace hallforge {

/// [r] = (v^r - v^-r)/(v - v^-1) at v = sqrt(q).  Negative r gives -[-r].
Scalar qint(long r, int q);
/// [r]! = [1][2]...[r].
Scalar qfact(long r, int q);
/// [m choose r] = [m][m-1]...[m-r+1]/[r]!.  Zero when r > m >= 0.
Scalar qbinom(long m, long r, int q);

/// phi_r(t) = (1-t)(1-t^2)...(1-t^r) evaluated at t = v^2 = q.
Scalar phi(long r, int q);
/// tau_r = 1/phi_r(q).  The vertex plays no role.
Scalar tau(long r, int q);

/// Number of s-dimensional subspaces of F_q^u, as v^{(u-s)s}[u choose s].
Scalar grassmannian_size(long s, long u, int q);
/// |GL_r(F_q)|.
BigInt gl_size(long r, int q);
BigInt int_pow(long base, long exp);

}  // namespace hallforge
