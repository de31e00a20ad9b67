#pragma once

#include <string>
#include <vector>

#include "hallforge/qalg.hpp"

namespace hallforge {

/// One instance of a defining relation: lhs = rhs in the quantum algebra.
struct RelationCheck {
  std::string id;      // relation family, e.g. "serre-e"
  std::string anchor;  // the relation as a formula
  std::string params;  // e.g. "i=1 j=2 l=1"
  GenWord lhs;
  GenWord rhs;
};

struct RelationBounds {
  int max_level = 2;   // levels l, k of imaginary generators
  int max_degree = 4;  // total level of each side
};

/// Borcherds-Bozec relations: K inverses and commutation, K against e/f,
/// e/f commutation at distinct vertices, the mixed relation with tau_r at
/// one vertex, and the Serre relations.
std::vector<RelationCheck> bb_relations(const CartanData& c, int q, const RelationBounds& b);

/// Generalized Kac-Moody relations for the given charge multiplicities.
std::vector<RelationCheck> qgkm_relations(const CartanData& c, const std::vector<int>& m, int q,
                                          const RelationBounds& b);

}  // namespace hallforge
