#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hallforge {

using DimVec = std::vector<int>;

struct Arrow {
  int src = 0;
  int tgt = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  static Quiver from_json(const nlohmann::json& j);
  static Quiver load(const std::string& path);
  nlohmann::json to_json() const;

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  int vertex_index(const std::string& id) const;

  /// g_i, the number of loops at i.
  int loops(int i) const;
  /// n_ij, the number of arrows i -> j (i != j).
  int arrows_between(int i, int j) const;
  bool is_sink(int l) const;
  bool is_source(int l) const;
  /// 16 hex digits identifying the quiver up to equality of its JSON form.
  std::string hash() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Same vertices and arrow order; arrows incident to l reversed.
Quiver reflect_quiver(const Quiver& q, int l);

int euler_form(const Quiver& q, const DimVec& x, const DimVec& y);
int sym_form(const Quiver& q, const DimVec& x, const DimVec& y);

struct CartanData {
  std::vector<std::vector<int>> a;

  int size() const { return static_cast<int>(a.size()); }
  bool is_real(int i) const { return a[i][i] == 2; }
  bool is_imaginary(int i) const { return a[i][i] <= 0; }
  /// Generator levels at i: {1} for real i, {1..max_level} for imaginary i.
  int max_level(int i, int max_level) const { return is_real(i) ? 1 : max_level; }
  /// s_i; throws DomainError for imaginary i.
  DimVec reflect(int i, const DimVec& x) const;
  int form(const DimVec& x, const DimVec& y) const;
};

CartanData cartan_from_quiver(const Quiver& q);

DimVec unit_vec(int n, int i, int scale = 1);
DimVec operator+(const DimVec& x, const DimVec& y);
DimVec operator-(const DimVec& x, const DimVec& y);
DimVec operator-(const DimVec& x);
DimVec scaled(const DimVec& x, int c);
int total(const DimVec& x);
bool is_zero(const DimVec& x);
bool is_nonneg(const DimVec& x);
std::string format_dims(const DimVec& x);
DimVec parse_dims(const std::string& s);
/// 16 hex digits of a 64-bit FNV-1a hash.
std::string content_hash(const std::string& text);

}  // namespace hallforge
