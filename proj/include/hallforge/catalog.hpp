#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "hallforge/orbit.hpp"

namespace hallforge {

enum class Mode { nilpotent, full };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct Bounds {
  int max_total_dim = 6;   // per orbit table (sum over all spaces)
  int max_code_bits = 22;  // log2 of the number of matrix tuples enumerated per table
  int max_enum_bits = 20;  // log2 of brute-force enumerations of Hom spaces and cocycles
};

/// Lazily built orbit tables for one presentation, field and mode.  Tables
/// are shared between threads; building one holds the catalog lock.
class Catalog {
 public:
  Catalog(Presentation p, int q, Mode mode, Bounds bounds, std::string key);

  const Presentation& presentation() const { return pres_; }
  const Fq& field() const { return field_; }
  Mode mode() const { return mode_; }
  const Bounds& bounds() const { return bounds_; }
  const std::string& key() const { return key_; }

  bool valid(const Rep& r) const;
  const OrbitTable& table(const std::vector<int>& dims) const;
  int classify(const Rep& r) const;
  Rep representative(const std::vector<int>& dims, int index) const;
  std::uint64_t orbit_size(const std::vector<int>& dims, int index) const;
  /// |Aut| = |GL(dims)| / |orbit|.
  BigInt aut_size(const std::vector<int>& dims, int index) const;
  int count(const std::vector<int>& dims) const { return table(dims).size(); }

  void set_exec(Exec e) { exec_ = e; }

 private:
  std::unique_ptr<OrbitTable> load_or_build(const std::vector<int>& dims) const;

  Presentation pres_;
  Fq field_;
  Mode mode_;
  Bounds bounds_;
  std::string key_;
  Exec exec_ = Exec::serial;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::unique_ptr<OrbitTable>> tables_;
};

}  // namespace hallforge
