#pragma once

// Brute-force reference computations used only by the tests.

#include <cstdint>
#include <vector>

#include "hallforge/catalog.hpp"
#include "hallforge/complex.hpp"
#include "hallforge/orbit.hpp"
#include "hallforge/presentation.hpp"

namespace hallforge::testing {

inline std::vector<Matrix> all_invertible(const Fq& f, int n) {
  std::vector<Matrix> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= f.q();
  for (std::uint64_t c = 0; c < total; ++c) {
    Matrix m(n, n);
    std::uint64_t x = c;
    for (auto& e : m.data) {
      e = static_cast<std::uint8_t>(x % f.q());
      x /= f.q();
    }
    if (is_invertible(f, m)) out.push_back(m);
  }
  return out;
}

/// Number of orbits of valid tuples by Burnside's lemma: the average number of fixed points.
inline std::uint64_t burnside_orbit_count(const Presentation& p, const Fq& f, const std::vector<int>& dims,
                                          const Catalog& cat) {
  std::vector<std::vector<Matrix>> groups;
  for (int d : dims) groups.push_back(all_invertible(f, d));
  std::uint64_t space = 1;
  for (int i = 0; i < entry_count(p, dims); ++i) space *= f.q();
  std::vector<Rep> valid;
  for (std::uint64_t c = 0; c < space; ++c) {
    Rep r = decode(p, dims, c, f.q());
    if (cat.valid(r)) valid.push_back(r);
  }
  std::uint64_t order = 1, fixed = 0;
  for (const auto& g : groups) order *= g.size();
  std::vector<size_t> idx(groups.size(), 0);
  while (true) {
    Morphism g;
    for (size_t s = 0; s < groups.size(); ++s) g.push_back(groups[s][idx[s]]);
    for (const auto& r : valid)
      if (is_morphism(p, f, r, r, g)) ++fixed;
    size_t s = 0;
    while (s < groups.size() && ++idx[s] == groups[s].size()) idx[s++] = 0;
    if (s == groups.size()) break;
  }
  return fixed / order;
}

/// All dimension vectors componentwise between 0 and d.
inline std::vector<std::vector<int>> sub_dimensions(const std::vector<int>& d) {
  std::vector<std::vector<int>> out{{}};
  for (int x : d) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int k = 0; k <= x; ++k) {
        auto w = v;
        w.push_back(k);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

/// Calls fn(K, M) for every short exact sequence 0 -> K -> L -> M -> 0 of
/// complexes with K acyclic.
template <class Fn>
void for_each_acyclic_kernel(const ComplexCategory& cc, const Cx& l, Fn fn) {
  Rep r = cc.to_rep(l);
  for (const auto& sd : sub_dimensions(r.dims))
    for_each_subobject(cc.presentation(), cc.field(), r, sd, [&](const Rep& sub, const Rep& quot) {
      Cx k = cc.from_rep(sub);
      if (cc.is_acyclic(k)) fn(k, cc.from_rep(quot));
    });
}

}  // namespace hallforge::testing
