#include "hallforge/qalg.hpp"

#include <set>
#include <sstream>

#include "hallforge/error.hpp"
#include "hallforge/qcomb.hpp"

namespace hallforge {

Charge Charge::standard(const Quiver& q, int field_size, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != q.num_vertices()) throw ConfigError("charge needs one entry per vertex");
  Charge c;
  for (int i = 0; i < q.num_vertices(); ++i) {
    const int g = q.loops(i);
    std::vector<std::vector<int>> tuples;
    for (int k = 0; k < m[i]; ++k) {
      std::vector<int> t(g, 0);
      int x = k;
      for (int p = g - 1; p >= 0; --p) {
        t[p] = x % field_size;
        x /= field_size;
      }
      if (x > 0 || (g == 0 && k > 0)) throw ConfigError("charge m_" + std::to_string(i + 1) + " = " +
                                                       std::to_string(m[i]) + " exceeds q^g");
      tuples.push_back(t);
    }
    c.lambdas.push_back(tuples);
  }
  c.validate(q, field_size);
  return c;
}

Charge Charge::trivial(const Quiver& q, int field_size) {
  return standard(q, field_size, std::vector<int>(q.num_vertices(), 1));
}

Charge Charge::parse(const std::string& s, const Quiver& q, int field_size) {
  DimVec m = parse_dims(s);
  if (m.size() == 1 && q.num_vertices() > 1) {
    int k = m[0];
    m.assign(q.num_vertices(), 1);
    for (int i = 0; i < q.num_vertices(); ++i)
      if (q.loops(i) > 0) m[i] = k;
  }
  for (int x : m)
    if (x < 1) throw ConfigError("charge entries must be positive");
  return standard(q, field_size, m);
}

void Charge::validate(const Quiver& q, int field_size) const {
  if (static_cast<int>(lambdas.size()) != q.num_vertices()) throw ConfigError("charge needs one entry per vertex");
  for (int i = 0; i < q.num_vertices(); ++i) {
    const int g = q.loops(i);
    if (lambdas[i].empty()) throw ConfigError("charge entries must be positive");
    if (g == 0 && lambdas[i].size() != 1) throw ConfigError("charge must be 1 at a real vertex");
    std::set<std::vector<int>> seen;
    for (const auto& t : lambdas[i]) {
      if (static_cast<int>(t.size()) != g) throw ConfigError("loop parameter tuple has the wrong length");
      for (int x : t)
        if (x < 0 || x >= field_size) throw ConfigError("loop parameter outside F_q");
      if (!seen.insert(t).second) throw ConfigError("loop parameters of a charge must be pairwise distinct");
    }
  }
}

Realization::Realization(const HallAlgebra& h, Family family, Charge charge)
    : h_(h), family_(family), charge_(std::move(charge)) {
  const RepCategory& rc = h.reps();
  if (family == Family::bb && rc.mode() != Mode::nilpotent)
    throw ConfigError("the Borcherds-Bozec realisation uses nilpotent representations");
  if (family == Family::qgkm) {
    if (rc.mode() != Mode::full) throw ConfigError("the generalized Kac-Moody realisation uses all representations");
    if (charge_.lambdas.empty()) charge_ = Charge::trivial(rc.quiver(), rc.q());
    charge_.validate(rc.quiver(), rc.q());
  }
}

void Realization::check_symbol(const GenSymbol& s) const {
  const int n = h_.num_vertices();
  if (!in_family(s, family_))
    throw ConfigError("generator " + symbol_name(s) + " does not belong to the " + family_name(family_) + " family");
  if (is_k(s)) {
    if (static_cast<int>(s.mu.size()) != n) throw ConfigError("K exponent has the wrong length");
    return;
  }
  if (s.vertex < 0 || s.vertex >= n) throw ConfigError("generator vertex out of range");
  if (is_divided(s)) {
    if (!cartan().is_real(s.vertex)) throw DomainError("divided powers are only used at real vertices");
    if (s.level < 0) throw ConfigError("negative divided power");
    return;
  }
  if (s.level < 1) throw ConfigError("generator level must be positive");
  if (family_ == Family::bb && cartan().is_real(s.vertex) && s.level != 1)
    throw DomainError("real vertices only carry level-one generators");
  if (family_ == Family::qgkm && s.level > charge_.m(s.vertex))
    throw DomainError("generator index exceeds the charge at vertex " + std::to_string(s.vertex + 1));
}

SDHElem Realization::compute_image(const GenSymbol& s) const {
  const RepCategory& rc = h_.reps();
  const int n = h_.num_vertices();
  const int q = h_.q();
  switch (s.kind) {
    case GenKind::K: return h_.K(s.mu);
    case GenKind::Kp: return h_.Kstar(s.mu);
    case GenKind::e:
    case GenKind::f: {
      IsoClass x = rc.classify(rc.semisimple(unit_vec(n, s.vertex, s.level)));
      Scalar c = Scalar::v_pow(static_cast<long>(s.level) * s.level - s.level, q);
      if (s.level % 2 == 1) c = -c;
      return c * h_.bracket(x, s.kind == GenKind::f);
    }
    case GenKind::E:
    case GenKind::F: {
      IsoClass x = rc.classify(rc.simple(s.vertex, charge_.lambdas[s.vertex][s.level - 1]));
      Scalar c = Scalar::rational(Rational(1, q - 1), q);
      if (s.kind == GenKind::E) return c * h_.C(x);
      return (-Scalar::v(q) * c) * h_.Cstar(x);
    }
    default: {
      GenSymbol base = s;
      base.level = 1;
      base.kind = s.kind == GenKind::e_div   ? GenKind::e
                  : s.kind == GenKind::f_div ? GenKind::f
                  : s.kind == GenKind::E_div ? GenKind::E
                                             : GenKind::F;
      return qfact(s.level, q).inverse() * h_.pow(image(base), s.level);
    }
  }
}

SDHElem Realization::image(const GenSymbol& s) const {
  {
    std::lock_guard lock(mu_);
    auto it = images_.find(s);
    if (it != images_.end()) return it->second;
  }
  check_symbol(s);
  SDHElem x = compute_image(s);
  std::lock_guard lock(mu_);
  return images_.emplace(s, std::move(x)).first->second;
}

SDHElem Realization::eval(const Monomial& m, Exec exec) const {
  if (m.empty()) return h_.unit();
  {
    std::lock_guard lock(mu_);
    auto it = monomials_.find(m);
    if (it != monomials_.end()) return it->second;
  }
  Monomial prefix(m.begin(), m.end() - 1);
  SDHElem x = h_.mul(eval(prefix, exec), image(m.back()), exec);
  std::lock_guard lock(mu_);
  return monomials_.emplace(m, std::move(x)).first->second;
}

SDHElem Realization::eval(const GenWord& w, Exec exec) const {
  SDHElem out;
  for (const auto& [m, c] : w) out = out + c * eval(m, exec);
  return out;
}

}  // namespace hallforge
