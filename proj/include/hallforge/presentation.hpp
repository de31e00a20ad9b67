#pragma once

#include <functional>
#include <vector>

#include "hallforge/fq.hpp"
#include "hallforge/quiver.hpp"
#include "hallforge/scalar.hpp"

namespace hallforge {

// A finite quiver with quadratic relations.  Representations of a quiver and
// Z/2-graded complexes of such representations are both handled as
// representations of a presentation; everything below is shared.

struct Block {
  int target = 0;
  int source = 0;
};

struct RelationTerm {
  int sign = 1;
  int outer = 0;  // applied second
  int inner = 0;  // applied first
};
using Relation = std::vector<RelationTerm>;

struct Presentation {
  int num_spaces = 0;
  std::vector<Block> blocks;
  std::vector<Relation> relations;
};

/// maps[b] is a dims[target] x dims[source] matrix.
struct Rep {
  std::vector<int> dims;
  std::vector<Matrix> maps;

  friend bool operator==(const Rep&, const Rep&) = default;
};

/// One matrix per space, f[s] : X_s -> Y_s.
using Morphism = std::vector<Matrix>;

Presentation module_presentation(const Quiver& q);

Rep zero_rep(const Presentation& p, const std::vector<int>& dims);
void check_shapes(const Presentation& p, const Rep& r);
bool satisfies_relations(const Presentation& p, const Fq& f, const Rep& r);
/// Every sufficiently long path acts by zero.
bool is_nilpotent(const Presentation& p, const Fq& f, const Rep& r);
Rep direct_sum(const Rep& x, const Rep& y);
/// g acts by x_b -> g_t x_b g_s^{-1}.
Rep transport(const Presentation& p, const Fq& f, const Rep& x, const Morphism& g);
bool is_morphism(const Presentation& p, const Fq& f, const Rep& x, const Rep& y, const Morphism& m);

/// Basis of Hom(X, Y) as intertwiners.
std::vector<Morphism> hom_basis(const Presentation& p, const Fq& f, const Rep& x, const Rep& y);
int hom_dim(const Presentation& p, const Fq& f, const Rep& x, const Rep& y);
/// Number of invertible intertwiners X -> X by enumerating End(X).
BigInt count_automorphisms(const Presentation& p, const Fq& f, const Rep& x, int max_bits);
/// Decides X = Y by searching Hom(X, Y) for an invertible element.
bool isomorphic(const Presentation& p, const Fq& f, const Rep& x, const Rep& y, int max_bits);

/// Extensions 0 -> sub -> E -> quotient -> 0 written as E_b = [[sub_b, c_b], [0, quot_b]].
struct ExtensionSpace {
  Rep quotient;
  Rep sub;
  std::vector<int> offsets;  // start of c_b inside a cocycle vector
  int unknowns = 0;
  Matrix cocycles;  // columns span the space of admissible c
  int normaliser = 0;  // sum over spaces of dim quotient_s * dim sub_s

  int cocycle_dim() const { return cocycles.cols; }
  Rep middle(const Fq& f, const std::vector<std::uint8_t>& coeffs) const;
};

ExtensionSpace extension_space(const Presentation& p, const Fq& f, const Rep& quotient, const Rep& sub);
/// dim Ext^1(X, Z) = dim Z^1 - (dim C^0 - dim Hom(X, Z)).
int ext1_dim_direct(const Presentation& p, const Fq& f, const Rep& x, const Rep& z);

/// Enumerates all k-dimensional subspaces of F_q^n as n x k column bases.
std::vector<Matrix> all_subspaces(const Fq& f, int n, int k);

/// Random access to the tuples of subspaces with given dimensions; get()
/// returns false when the tuple is not a subrepresentation.
class SubobjectEnumerator {
 public:
  SubobjectEnumerator(const Presentation& p, const Fq& f, const Rep& y, const std::vector<int>& sub_dims);
  std::uint64_t size() const { return size_; }
  bool get(std::uint64_t index, Rep& sub, Rep& quotient) const;

 private:
  struct Choice {
    Matrix u;     // basis of the subspace
    Matrix c;     // complement
    Matrix pinv;  // inverse of [u | c]
  };
  const Presentation& p_;
  const Fq& f_;
  const Rep& y_;
  std::vector<int> sub_dims_;
  std::vector<std::vector<Choice>> choices_;
  std::uint64_t size_ = 0;
};

/// Calls fn(sub, quotient) for every subrepresentation with the given dimensions.
void for_each_subobject(const Presentation& p, const Fq& f, const Rep& y, const std::vector<int>& sub_dims,
                        const std::function<void(const Rep&, const Rep&)>& fn);

}  // namespace hallforge
