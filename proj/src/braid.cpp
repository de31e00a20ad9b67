#include "hallforge/braid.hpp"

#include "hallforge/error.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

std::string variant_name(BraidVariant v) {
  switch (v) {
    case BraidVariant::t_prime_plus: return "T'_{i,1}";
    case BraidVariant::t_second_minus: return "T''_{i,-1}";
    case BraidVariant::t_prime_minus: return "T'_{i,-1}";
    default: return "T''_{i,1}";
  }
}

namespace {

GenWord w(const GenSymbol& s) { return word(s); }

GenWord divided(GenKind k, int i, int r) {
  if (r == 0) return unit_word();
  GenSymbol s{k, i, r, {}};
  return w(s);
}

/// sum_{r+s=top} (-1)^r v^{sign r} x_i^{(r)} y x_i^{(s)}, or with the outer
/// factors swapped when reversed.
GenWord reflection_sum(GenKind div, int i, const GenWord& y, int top, int sign, bool reversed, int q) {
  GenWord out;
  for (int r = 0; r <= top; ++r) {
    Scalar c = Scalar::v_pow(static_cast<long>(sign) * r, q);
    if (r % 2 == 1) c = -c;
    GenWord a = divided(div, i, r), b = divided(div, i, top - r);
    out = out + c * (reversed ? b * y * a : a * y * b);
  }
  return out;
}

}  // namespace

GenWord braid_letter(const CartanData& c, int i, const GenSymbol& s, int q) {
  const int n = c.size();
  const DimVec ai = unit_vec(n, i);
  const Scalar v = Scalar::v(q);
  switch (s.kind) {
    case GenKind::K: return w(gen::K(c.reflect(i, s.mu)));
    case GenKind::Kp: return w(gen::Kp(c.reflect(i, s.mu)));
    case GenKind::e_div:
    case GenKind::f_div:
    case GenKind::E_div:
    case GenKind::F_div: {
      GenKind base = s.kind == GenKind::e_div   ? GenKind::e
                     : s.kind == GenKind::f_div ? GenKind::f
                     : s.kind == GenKind::E_div ? GenKind::E
                                                : GenKind::F;
      GenWord t = braid_letter(c, i, GenSymbol{base, s.vertex, 1, {}}, q);
      return qfact(s.level, q).inverse() * power(t, s.level);
    }
    default: break;
  }
  const int j = s.vertex;
  if (j == i) {
    if (s.level != 1) throw DomainError("real vertices only carry level-one generators");
    switch (s.kind) {
      case GenKind::e: return v * (w(gen::Kp(-ai)) * w(gen::f(i)));
      case GenKind::f: return v.inverse() * (w(gen::e(i)) * w(gen::K(-ai)));
      case GenKind::E: return Scalar(-1) * (w(gen::Kp(-ai)) * w(gen::F(i)));
      default: return Scalar(-1) * (w(gen::E(i)) * w(gen::K(-ai)));
    }
  }
  const int a = c.a[i][j];
  switch (s.kind) {
    case GenKind::e: return reflection_sum(GenKind::e_div, i, w(s), -s.level * a, 1, false, q);
    case GenKind::f: return reflection_sum(GenKind::f_div, i, w(s), -s.level * a, 1, false, q);
    case GenKind::E: return reflection_sum(GenKind::E_div, i, w(s), -a, 1, false, q);
    default: return reflection_sum(GenKind::F_div, i, w(s), -a, -1, true, q);
  }
}

GenWord braid_T(const CartanData& c, int i, const GenWord& x, BraidVariant v, int q) {
  if (i < 0 || i >= c.size()) throw ConfigError("braid vertex out of range");
  if (!c.is_real(i)) throw DomainError("braid operators are only defined at real vertices");
  auto tp = [&](const GenWord& y) { return substitute(y, [&](const GenSymbol& s) { return braid_letter(c, i, s, q); }); };
  switch (v) {
    case BraidVariant::t_prime_plus: return tp(x);
    case BraidVariant::t_second_minus: return sigma(tp(sigma(x)));
    default:
      throw UnsupportedError(variant_name(v) + " is defined through the bar involution, which is not available at v = sqrt(q)");
  }
}

}  // namespace hallforge
