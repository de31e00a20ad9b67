#pragma once

#include <map>
#include <shared_mutex>

#include "hallforge/complex.hpp"

namespace hallforge {

/// [C_A + C*_B] * [K_alpha] * [K*_beta].  K-exponents are dimension vectors
/// and may be negative.
struct NormalBasisElt {
  IsoClass A;
  IsoClass B;
  DimVec alpha;
  DimVec beta;

  friend bool operator==(const NormalBasisElt&, const NormalBasisElt&) = default;
  friend auto operator<=>(const NormalBasisElt&, const NormalBasisElt&) = default;
};

/// Linear combination of basis elements; never stores a zero coefficient.
using SDHElem = std::map<NormalBasisElt, Scalar>;

void add_term(SDHElem& x, const NormalBasisElt& b, const Scalar& c);
SDHElem operator+(SDHElem x, const SDHElem& y);
SDHElem operator-(SDHElem x, const SDHElem& y);
SDHElem operator*(const Scalar& c, const SDHElem& x);
/// Human-readable form; classes print as dims#index.
std::string format_elem(const SDHElem& x);

/// The twisted semi-derived Hall algebra of a representation category,
/// computed on demand.  Products of C-parts are memoised and shared between
/// threads.
class HallAlgebra {
 public:
  explicit HallAlgebra(const RepCategory& reps);

  const RepCategory& reps() const { return reps_; }
  const ComplexCategory& complexes() const { return cx_; }
  int q() const { return reps_.q(); }
  int num_vertices() const { return reps_.num_vertices(); }
  DimVec zero_dim() const { return DimVec(num_vertices(), 0); }

  SDHElem unit() const;
  SDHElem basis(const NormalBasisElt& b, const Scalar& c = 1) const;
  SDHElem K(const DimVec& alpha) const;
  SDHElem Kstar(const DimVec& beta) const;
  /// [C_X] and [C*_X].
  SDHElem C(const IsoClass& x) const;
  SDHElem Cstar(const IsoClass& x) const;
  /// [[C_X]] = [C_X]/|Aut X|, or the starred version.
  SDHElem bracket(const IsoClass& x, bool starred) const;
  /// v^{-r(r-1)/2} [C_{S^r}] / [r]! at a loop-free vertex.
  SDHElem divided_power_CS(int vertex, int r, bool starred) const;

  /// Normal form of an arbitrary complex: its homology and the images of the
  /// differentials.  Acyclic complexes collapse to K-exponents.
  SDHElem reduce(const Cx& m) const;
  SDHElem reduce(const CxClass& c) const { return reduce(cx_.representative(c)); }

  /// Twisted Hall product [L]*[M] of two complexes, each middle term reduced.
  SDHElem cx_product(const Cx& l, const Cx& m, Exec exec = Exec::serial) const;

  SDHElem mul(const SDHElem& x, const SDHElem& y, Exec exec = Exec::serial) const;
  SDHElem pow(const SDHElem& x, int n, Exec exec = Exec::serial) const;
  /// Inverse of a single basis element with no C-part.
  SDHElem k_inverse(const SDHElem& x) const;

  nlohmann::json to_json(const SDHElem& x) const;
  SDHElem from_json(const nlohmann::json& j) const;
  std::string to_string(const SDHElem& x) const;

  std::size_t cache_size() const;

 private:
  SDHElem c_product(const IsoClass& a, const IsoClass& b, const IsoClass& a2, const IsoClass& b2, Exec exec) const;

  const RepCategory& reps_;
  ComplexCategory cx_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::array<IsoClass, 4>, SDHElem> cache_;
};

}  // namespace hallforge
