#pragma once

#include <map>
#include <mutex>

#include "hallforge/sdh.hpp"

namespace hallforge {

// BGP reflection functors.  F+ at a sink l of q: the space at l becomes the
// kernel of the sum of the incoming maps and each reversed arrow carries the
// corresponding row block of the kernel basis.  F- at a source l: the space
// at l becomes the cokernel of the stacked outgoing maps.  Both keep the
// arrow order, so the result is a representation of reflect_quiver(q, l).

Rep bgp_plus(const Quiver& q, const Fq& f, const Rep& m, int l);
Morphism bgp_plus(const Quiver& q, const Fq& f, const Rep& m, const Rep& n, const Morphism& g, int l);
Cx bgp_plus(const Quiver& q, const Fq& f, const Cx& m, int l);

Rep bgp_minus(const Quiver& q, const Fq& f, const Rep& m, int l);
Morphism bgp_minus(const Quiver& q, const Fq& f, const Rep& m, const Rep& n, const Morphism& g, int l);
Cx bgp_minus(const Quiver& q, const Fq& f, const Cx& m, int l);

/// At a sink: 0 -> M -> X -> T -> 0 with T = K_A + K*_B and no summand S_l
/// in the top of X.  At a source: 0 -> T -> X -> M -> 0 with T = K*_A + K_B
/// and no S_l in the socle of X.  A and B are multiples of one neighbour
/// alpha_j of l; pad > 0 enlarges both by pad copies to give a different
/// resolution of the same M.
struct Resolution {
  Cx x;
  Cx t;
  DimVec a;
  DimVec b;
};
Resolution sink_resolution(const ComplexCategory& cc, const Cx& m, int l, int pad = 0);
Resolution source_resolution(const ComplexCategory& cc, const Cx& m, int l, int pad = 0);

/// Gamma_l: H(Q) -> H(s_l Q) for a sink l of Q, and its inverse Gamma_l^-
/// built from the source l of s_l Q.
class Reflection {
 public:
  Reflection(const HallAlgebra& source, const HallAlgebra& target, int l);

  int vertex() const { return l_; }
  const HallAlgebra& source() const { return src_; }
  const HallAlgebra& target() const { return tgt_; }
  const Quiver& source_quiver() const { return src_.reps().quiver(); }
  const Quiver& target_quiver() const { return tgt_.reps().quiver(); }

  /// v^{<res T, res M>} q^{-<T, M>} [F+ T]^{-1} * [F+ X].
  SDHElem gamma_cx(const Cx& m, int pad = 0, Exec exec = Exec::serial) const;
  /// v^{<res M, res T>} q^{-<M, T>} [F- X] * [F- T]^{-1}.
  SDHElem gamma_minus_cx(const Cx& m, int pad = 0, Exec exec = Exec::serial) const;

  SDHElem gamma(const SDHElem& x, Exec exec = Exec::serial) const;
  SDHElem gamma_minus(const SDHElem& y, Exec exec = Exec::serial) const;

  /// v [K*_{S_l}]^{-1} * [C*_{S_l}], or with the roles of C and C* exchanged.
  SDHElem closed_form_simple(bool starred) const;
  /// (1-q)^{n a_lj} sum_{r+s=-n a_lj} (-1)^r v^r [C_{S_l}]^{(r)} * [C_N] * [C_{S_l}]^{(s)}
  /// for N = S_j^n, evaluated in H(s_l Q); starred exchanges C and C*.
  SDHElem closed_form_neighbour(int j, int n, bool starred) const;

 private:
  SDHElem gamma_pair(const IsoClass& a, const IsoClass& b, bool minus, Exec exec) const;

  const HallAlgebra& src_;
  const HallAlgebra& tgt_;
  int l_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<IsoClass, IsoClass>, SDHElem> plus_, minus_;
};

}  // namespace hallforge
