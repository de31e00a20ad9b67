#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hallforge/parallel.hpp"
#include "hallforge/presentation.hpp"

namespace hallforge {

// All representations with fixed dimensions are encoded as integers in
// [0, q^entries): matrix entries in block order, row-major, most significant
// first.  Numeric order of codes is lexicographic order of entry tuples.

std::uint64_t encode(const Rep& r, int q);
Rep decode(const Presentation& p, const std::vector<int>& dims, std::uint64_t code, int q);
int entry_count(const Presentation& p, const std::vector<int>& dims);

struct OrbitClassInfo {
  std::uint64_t code = 0;        // minimal code in the orbit
  std::uint64_t orbit_size = 0;  // number of codes in the orbit
};

/// Partition of the valid representations with given dimensions into orbits
/// of the product of general linear groups acting by change of basis.
struct OrbitTable {
  std::vector<int> dims;
  int entries = 0;
  std::uint64_t space = 1;
  std::vector<std::int32_t> class_of;  // -1 for invalid codes
  std::vector<OrbitClassInfo> classes;  // sorted by canonical code

  int size() const { return static_cast<int>(classes.size()); }
};

using RepPredicate = std::function<bool(const Rep&)>;

/// The predicate must be invariant under change of basis.
OrbitTable build_orbit_table(const Presentation& p, const Fq& f, const std::vector<int>& dims,
                             const RepPredicate& valid, Exec exec);

}  // namespace hallforge
