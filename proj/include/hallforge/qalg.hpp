#pragma once

#include <mutex>

#include "hallforge/sdh.hpp"
#include "hallforge/words.hpp"

namespace hallforge {

/// Multiplicities m_i of the generalized Kac-Moody generators together with
/// the loop parameters of the simples S_il they are realised by.
struct Charge {
  std::vector<std::vector<std::vector<int>>> lambdas;  // [vertex][l-1] -> tuple in F_q^{g_i}

  int m(int i) const { return static_cast<int>(lambdas[i].size()); }
  /// Charge with the given multiplicities; parameters are the first m_i
  /// tuples of F_q^{g_i} in lexicographic order.
  static Charge standard(const Quiver& q, int field_size, const std::vector<int>& m);
  /// All ones.
  static Charge trivial(const Quiver& q, int field_size);
  /// "2" (same for every imaginary vertex) or "1,2" (per vertex).
  static Charge parse(const std::string& s, const Quiver& q, int field_size);
  /// Throws ConfigError unless m_i = 1 at real vertices, m_i <= q^{g_i} and
  /// the parameter tuples are distinct.
  void validate(const Quiver& q, int field_size) const;
};

/// The embedding of a quantum algebra into a semi-derived Hall algebra,
/// extended to words.  Borcherds-Bozec generators need the nilpotent
/// category; generalized Kac-Moody generators need the full one.
class Realization {
 public:
  Realization(const HallAlgebra& h, Family family, Charge charge = {});

  const HallAlgebra& algebra() const { return h_; }
  Family family() const { return family_; }
  const Charge& charge() const { return charge_; }
  const CartanData& cartan() const { return h_.reps().cartan(); }
  int q() const { return h_.q(); }

  /// Checks that the symbol is defined for this quiver, family and charge.
  void check_symbol(const GenSymbol& s) const;
  SDHElem image(const GenSymbol& s) const;
  SDHElem eval(const GenWord& w, Exec exec = Exec::serial) const;
  SDHElem eval(const Monomial& m, Exec exec = Exec::serial) const;

 private:
  SDHElem compute_image(const GenSymbol& s) const;

  const HallAlgebra& h_;
  Family family_;
  Charge charge_;
  mutable std::mutex mu_;
  mutable std::map<GenSymbol, SDHElem> images_;
  mutable std::map<Monomial, SDHElem> monomials_;
};

}  // namespace hallforge
