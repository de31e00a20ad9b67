#include <gtest/gtest.h>

#include "hallforge/complex.hpp"
#include "hallforge/error.hpp"
#include "oracles.hpp"
#include "test_quivers.hpp"

using namespace hallforge;
using namespace hallforge::testing;

namespace {

std::vector<Rep> small_reps(const RepCategory& rc, int max_total) {
  std::vector<Rep> out;
  int n = rc.num_vertices();
  std::vector<DimVec> dims;
  if (n == 1) {
    for (int a = 0; a <= max_total; ++a) dims.push_back({a});
  } else {
    for (int a = 0; a <= max_total; ++a)
      for (int b = 0; a + b <= max_total; ++b) dims.push_back({a, b});
  }
  for (const auto& d : dims)
    for (const auto& c : rc.enumerate(d)) out.push_back(rc.representative(c));
  return out;
}

}  // namespace

TEST(Complex, StalksAndShift) {
  RepCategory rc(a2(), 2);
  ComplexCategory cc(rc);
  Rep s = rc.simple(0);
  for (const Cx& m : {cc.K(s), cc.Kstar(s), cc.C(s), cc.Cstar(s)}) EXPECT_TRUE(cc.is_valid(m));
  EXPECT_EQ(cc.shift(cc.C(s)), cc.Cstar(s));
  EXPECT_EQ(cc.shift(cc.Cstar(s)), cc.C(s));
  EXPECT_TRUE(cc.isomorphic(cc.shift(cc.K(s)), cc.Kstar(s)));
  EXPECT_TRUE(cc.is_acyclic(cc.K(s)));
  EXPECT_TRUE(cc.is_acyclic(cc.Kstar(s)));
  EXPECT_FALSE(cc.is_acyclic(cc.C(s)));
  Homology h = cc.homology(cc.C(s));
  EXPECT_EQ(h.h1.dims, (DimVec{1, 0}));
  EXPECT_EQ(h.h0.dims, (DimVec{0, 0}));
  Homology hk = cc.homology(cc.K(s));
  EXPECT_EQ(hk.im0, (DimVec{1, 0}));
  EXPECT_EQ(hk.im1, (DimVec{0, 0}));
  Cx bad = cc.K(s);
  bad.d1[0](0, 0) = 1;
  EXPECT_FALSE(cc.is_valid(bad));
  EXPECT_THROW(cc.check(bad), ConfigError);
}

TEST(Complex, JsonRoundTrip) {
  RepCategory rc(kronecker(), 3);
  ComplexCategory cc(rc);
  Cx m = cc.sum(cc.K(rc.simple(0)), cc.C(rc.representative(rc.enumerate({1, 1})[1])));
  EXPECT_EQ(cc.from_json(cc.to_json(m)), m);
}

TEST(Complex, ProjectiveStalkHoms) {
  // Hom(K_A, M) = Hom(A, M^0) and Hom(K*_A, M) = Hom(A, M^1).
  RepCategory rc(loop_arrow(), 2);
  ComplexCategory cc(rc);
  auto reps = small_reps(rc, 1);
  for (const auto& a : reps)
    for (const auto& x : reps)
      for (const auto& y : reps) {
        Cx m = cc.sum(cc.K(x), cc.C(y));
        EXPECT_EQ(cc.hom_dim(cc.K(a), m), rc.hom_dim(a, m.m0));
        EXPECT_EQ(cc.hom_dim(cc.Kstar(a), m), rc.hom_dim(a, m.m1));
      }
}

TEST(Complex, EulerFormIdentities) {
  for (const auto& nq : {NamedQuiver{"jordan", jordan()}, NamedQuiver{"a2", a2()}}) {
    RepCategory rc(nq.quiver, 2);
    ComplexCategory cc(rc);
    auto reps = small_reps(rc, 1);
    for (const auto& a : reps)
      for (const auto& b : reps) {
        int ab = rc.euler(a.dims, b.dims), ba = rc.euler(b.dims, a.dims);
        EXPECT_EQ(cc.euler(cc.C(a), cc.K(b)), ab);
        EXPECT_EQ(cc.euler(cc.Cstar(a), cc.Kstar(b)), ab);
        EXPECT_EQ(cc.euler(cc.K(b), cc.Cstar(a)), ba);
        EXPECT_EQ(cc.euler(cc.Kstar(b), cc.C(a)), ba);
        EXPECT_EQ(cc.euler(cc.K(b), cc.C(a)), 0);
        EXPECT_EQ(cc.euler(cc.Cstar(a), cc.K(b)), 0);
        EXPECT_EQ(cc.euler(cc.C(a), cc.Kstar(b)), 0);
        EXPECT_EQ(cc.euler(cc.Kstar(b), cc.Cstar(a)), 0);
        EXPECT_EQ(cc.euler(cc.K(a), cc.K(b)), ab);
        EXPECT_EQ(cc.euler(cc.Kstar(a), cc.Kstar(b)), ab);
        EXPECT_EQ(cc.euler(cc.K(a), cc.Kstar(b)), ab);
        EXPECT_EQ(cc.euler(cc.Kstar(a), cc.K(b)), ab);
      }
  }
}

TEST(Complex, EnumerationMatchesBurnside) {
  RepCategory rc(a2(), 2);
  ComplexCategory cc(rc);
  for (const auto& [d0, d1] : std::vector<std::pair<DimVec, DimVec>>{
           {{1, 0}, {1, 0}}, {{1, 1}, {0, 1}}, {{1, 1}, {1, 0}}, {{0, 1}, {1, 1}}}) {
    std::vector<int> dims = {d0[0], d0[1], d1[0], d1[1]};
    EXPECT_EQ(static_cast<std::uint64_t>(cc.enumerate(d0, d1).size()),
              burnside_orbit_count(cc.presentation(), cc.field(), dims, cc.catalog()));
  }
  RepCategory j(jordan(), 2);
  ComplexCategory cj(j);
  // K_S, K*_S, C_S + C*_S
  EXPECT_EQ(cj.enumerate({1}, {1}).size(), 3u);
}

TEST(Complex, AutomorphismsOrbitStabiliser) {
  RepCategory rc(jordan(), 2);
  ComplexCategory cc(rc);
  for (const auto& [d0, d1] : std::vector<std::pair<DimVec, DimVec>>{{{1}, {1}}, {{2}, {1}}, {{1}, {2}}})
    for (const auto& c : cc.enumerate(d0, d1))
      EXPECT_EQ(cc.aut_size(c), cc.aut_size_bruteforce(cc.representative(c)));
}

TEST(Complex, HallNumbersAndRiedtmannPeng) {
  RepCategory rc(a2(), 2);
  ComplexCategory cc(rc);
  Rep s = rc.simple(0);
  CxClass k = cc.classify(cc.K(s)), c = cc.classify(cc.C(s)), cs = cc.classify(cc.Cstar(s));
  EXPECT_EQ(cc.hall_number(cs, c, k), 1);
  EXPECT_EQ(cc.hall_number(c, cs, k), 0);
  auto reps = small_reps(rc, 1);
  std::vector<Cx> cxs;
  for (const auto& x : reps) {
    cxs.push_back(cc.C(x));
    cxs.push_back(cc.Cstar(x));
    cxs.push_back(cc.K(x));
  }
  for (const auto& l : cxs)
    for (const auto& m : cxs) {
      CxClass lc = cc.classify(l), mc = cc.classify(m);
      auto weights = cc.extension_weights(l, m);
      auto parallel = cc.extension_weights(l, m, Exec::parallel);
      EXPECT_EQ(weights, parallel);
      for (const auto& [e, w] : weights) {
        Rational expect = w * Rational(cc.aut_size(e)) / Rational(cc.aut_size(lc) * cc.aut_size(mc));
        EXPECT_EQ(Rational(cc.hall_number(lc, mc, e)), expect);
        EXPECT_EQ(cc.hall_number(lc, mc, e, Exec::parallel), cc.hall_number(lc, mc, e));
      }
    }
}

TEST(Complex, HomologyOfSums) {
  RepCategory rc(kronecker(), 2);
  ComplexCategory cc(rc);
  Rep x = rc.representative(rc.enumerate({1, 1})[1]);
  Cx m = cc.sum(cc.sum(cc.K(x), cc.Cstar(rc.simple(1))), cc.Kstar(rc.simple(0)));
  HomologyClass h = cc.homology_class(m);
  EXPECT_EQ(h.h0, rc.classify(rc.simple(1)));
  EXPECT_EQ(h.h1, rc.zero_class());
  EXPECT_EQ(h.im0, x.dims);
  EXPECT_EQ(h.im1, (DimVec{1, 0}));
}
