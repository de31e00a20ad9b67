#pragma once

#include <map>

#include "hallforge/repcat.hpp"

namespace hallforge {

/// Z/2-graded complex M0 -d0-> M1 -d1-> M0 with d1 d0 = d0 d1 = 0.
/// d0[v] is dim M1_v x dim M0_v and d1[v] is dim M0_v x dim M1_v.
struct Cx {
  Rep m0;
  Rep m1;
  std::vector<Matrix> d0;
  std::vector<Matrix> d1;

  friend bool operator==(const Cx&, const Cx&) = default;
};

struct CxClass {
  DimVec dim0;
  DimVec dim1;
  int index = 0;

  friend bool operator==(const CxClass&, const CxClass&) = default;
  friend auto operator<=>(const CxClass&, const CxClass&) = default;
};

struct Homology {
  Rep h0;  // ker d0 / im d1
  Rep h1;  // ker d1 / im d0
  DimVec im0;
  DimVec im1;
};

struct HomologyClass {
  IsoClass h0;
  IsoClass h1;
  DimVec im0;
  DimVec im1;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

/// Quotient W/U of a representation by nested subrepresentations given by
/// per-vertex column bases.
Rep subquotient(const Presentation& p, const Fq& f, const Rep& m, const std::vector<Matrix>& w,
                const std::vector<Matrix>& u);

Presentation complex_presentation(const Quiver& q);

class ComplexCategory {
 public:
  explicit ComplexCategory(const RepCategory& reps);

  const RepCategory& reps() const { return reps_; }
  const Fq& field() const { return reps_.field(); }
  const Presentation& presentation() const { return catalog_.presentation(); }
  const Catalog& catalog() const { return catalog_; }
  int num_vertices() const { return reps_.num_vertices(); }

  Rep to_rep(const Cx& c) const;
  Cx from_rep(const Rep& r) const;

  Cx zero() const;
  /// K_X = (X -id-> X -0-> X).
  Cx K(const Rep& x) const;
  /// K*_X = (X -0-> X -id-> X).
  Cx Kstar(const Rep& x) const;
  /// C_X has X in degree 1.
  Cx C(const Rep& x) const;
  /// C*_X has X in degree 0.
  Cx Cstar(const Rep& x) const;
  Cx shift(const Cx& m) const;
  Cx sum(const Cx& a, const Cx& b) const;
  DimVec res_dim(const Cx& m) const { return m.m0.dims + m.m1.dims; }

  bool is_valid(const Cx& m) const;
  void check(const Cx& m) const;
  Homology homology(const Cx& m) const;
  HomologyClass homology_class(const Cx& m) const;
  bool is_acyclic(const Cx& m) const;

  int hom_dim(const Cx& l, const Cx& m) const;
  int ext1_dim(const Cx& l, const Cx& m) const;
  int euler(const Cx& l, const Cx& m) const { return hom_dim(l, m) - ext1_dim(l, m); }
  BigInt aut_size_bruteforce(const Cx& m) const;
  bool isomorphic(const Cx& a, const Cx& b) const;

  CxClass classify(const Cx& m) const;
  std::vector<CxClass> enumerate(const DimVec& dim0, const DimVec& dim1) const;
  Cx representative(const CxClass& c) const;
  BigInt aut_size(const CxClass& c) const;
  std::string id(const CxClass& c) const;

  /// Number of subcomplexes of E isomorphic to M with quotient isomorphic to L.
  BigInt hall_number(const CxClass& l, const CxClass& m, const CxClass& e, Exec exec = Exec::serial) const;
  /// E -> |Ext^1(L,M)_E| / |Hom(L,M)| by enumerating cocycles.
  std::map<CxClass, Rational> extension_weights(const Cx& l, const Cx& m, Exec exec = Exec::serial) const;

  nlohmann::json to_json(const Cx& m) const;
  Cx from_json(const nlohmann::json& j) const;

 private:
  std::vector<int> space_dims(const DimVec& d0, const DimVec& d1) const;

  const RepCategory& reps_;
  Catalog catalog_;
};

}  // namespace hallforge
