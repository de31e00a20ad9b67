#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>

#include "hallforge/catalog.hpp"
#include "hallforge/quiver.hpp"
#include "hallforge/scalar.hpp"

namespace hallforge {

/// Isomorphism class of a representation: its dimension vector and its
/// position among the classes of that dimension vector.
struct IsoClass {
  DimVec dim;
  int index = 0;

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
  friend auto operator<=>(const IsoClass&, const IsoClass&) = default;
};

using ModElem = std::map<IsoClass, Scalar>;

/// Representations of a quiver over F_q, nilpotent or arbitrary.
class RepCategory {
 public:
  RepCategory(Quiver q, int field_size, Mode mode = Mode::nilpotent, Bounds bounds = {});

  const Quiver& quiver() const { return quiver_; }
  const CartanData& cartan() const { return cartan_; }
  const Fq& field() const { return catalog_.field(); }
  int q() const { return field().q(); }
  Mode mode() const { return catalog_.mode(); }
  const Bounds& bounds() const { return catalog_.bounds(); }
  const Presentation& presentation() const { return catalog_.presentation(); }
  const Catalog& catalog() const { return catalog_; }
  Catalog& catalog() { return catalog_; }
  /// Hash of quiver, field size and mode; prefix of every class id.
  const std::string& hash() const { return hash_; }
  int num_vertices() const { return quiver_.num_vertices(); }

  bool is_valid(const Rep& r) const { return catalog_.valid(r); }
  IsoClass classify(const Rep& r) const;
  std::vector<IsoClass> enumerate(const DimVec& d) const;
  Rep representative(const IsoClass& c) const;
  BigInt aut_size(const IsoClass& c) const;
  BigInt aut_size_bruteforce(const Rep& r) const;
  bool isomorphic(const Rep& x, const Rep& y) const;
  IsoClass zero_class() const { return IsoClass{DimVec(num_vertices(), 0), 0}; }
  std::string id(const IsoClass& c) const;
  IsoClass parse_id(const std::string& id) const;

  Rep zero(const DimVec& d) const;
  Rep simple(int i) const;
  /// S_i(lambda): loops at i act by the scalars lambda (full mode).
  Rep simple(int i, const std::vector<int>& lambda) const;
  /// Direct sum of d_i copies of S_i.
  Rep semisimple(const DimVec& d) const;

  int hom_dim(const Rep& x, const Rep& y) const;
  /// dim Hom - Euler form; throws InternalError if negative.
  int ext1_dim(const Rep& x, const Rep& y) const;
  int ext1_dim_direct(const Rep& x, const Rep& y) const;
  int euler(const DimVec& x, const DimVec& y) const { return euler_form(quiver_, x, y); }

  /// Number of subrepresentations L of Y with L = Z and Y/L = X.
  BigInt hall_number(const IsoClass& x, const IsoClass& z, const IsoClass& y, Exec exec = Exec::serial) const;
  /// Y -> |Ext^1(X,Z)_Y| / |Hom(X,Z)|, by enumerating cocycles.
  std::map<IsoClass, Rational> extension_weights(const Rep& x, const Rep& z, Exec exec = Exec::serial) const;
  /// [X] <> [Z] from Hall numbers; twisted multiplies by v^<dim X, dim Z>.
  ModElem hall_product(const ModElem& x, const ModElem& z, bool twisted, Exec exec = Exec::serial) const;

  nlohmann::json rep_to_json(const Rep& r) const;
  Rep rep_from_json(const nlohmann::json& j) const;
  nlohmann::json class_to_json(const IsoClass& c) const;

 private:
  Quiver quiver_;
  CartanData cartan_;
  std::string hash_;
  Catalog catalog_;
};

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols, const Fq& f);

}  // namespace hallforge
