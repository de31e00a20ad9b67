#include <gtest/gtest.h>

#include "hallforge/error.hpp"
#include "hallforge/qcomb.hpp"
#include "hallforge/sdh.hpp"
#include "oracles.hpp"
#include "test_quivers.hpp"

using namespace hallforge;
using namespace hallforge::testing;

namespace {

Scalar vp(long n, int q) { return Scalar::v_pow(n, q); }

/// [L]*[M] from subcomplex counts and the Riedtmann-Peng formula.
SDHElem product_by_subcomplexes(const HallAlgebra& h, const Cx& l, const Cx& m) {
  const ComplexCategory& cc = h.complexes();
  const RepCategory& rc = h.reps();
  CxClass lc = cc.classify(l), mc = cc.classify(m);
  int twist = rc.euler(l.m0.dims, m.m0.dims) + rc.euler(l.m1.dims, m.m1.dims);
  SDHElem out;
  for (const auto& e : cc.enumerate(lc.dim0 + mc.dim0, lc.dim1 + mc.dim1)) {
    BigInt f = cc.hall_number(lc, mc, e);
    if (f == 0) continue;
    Rational w = Rational(f * cc.aut_size(lc) * cc.aut_size(mc)) / Rational(cc.aut_size(e));
    w.canonicalize();
    out = out + (Scalar::rational(w, h.q()) * vp(twist, h.q())) * h.reduce(e);
  }
  return out;
}

}  // namespace

TEST(Reduce, Examples) {
  RepCategory rc(a2(), 2);
  HallAlgebra h(rc);
  const ComplexCategory& cc = h.complexes();
  Rep s = rc.simple(0), t = rc.simple(1);
  IsoClass sc = rc.classify(s), tc = rc.classify(t);
  EXPECT_EQ(h.reduce(cc.sum(cc.C(s), cc.Cstar(t))), h.basis({sc, tc, {0, 0}, {0, 0}}));
  EXPECT_EQ(h.reduce(cc.K(s)), h.K({1, 0}));
  EXPECT_EQ(h.reduce(cc.Kstar(t)), h.Kstar({0, 1}));
  EXPECT_EQ(h.reduce(cc.sum(cc.K(s), cc.C(s))), h.basis({sc, rc.zero_class(), {1, 0}, {0, 0}}, vp(1, 2)));
  EXPECT_EQ(h.reduce(cc.zero()), h.unit());
}

TEST(Reduce, FullModeCollapsesAcyclicClasses) {
  RepCategory rc(jordan(), 3, Mode::full);
  HallAlgebra h(rc);
  const ComplexCategory& cc = h.complexes();
  for (int lambda = 0; lambda < 3; ++lambda) EXPECT_EQ(h.reduce(cc.K(rc.simple(0, {lambda}))), h.K({1}));
  Rep two = direct_sum(rc.simple(0, {0}), rc.simple(0, {1}));
  EXPECT_EQ(h.reduce(cc.K(two)), h.K({2}));
  EXPECT_EQ(h.reduce(cc.Kstar(two)), h.Kstar({2}));
}

TEST(Reduce, AcyclicKernelSequences) {
  for (const auto& nq : {NamedQuiver{"jordan", jordan()}, NamedQuiver{"a2", a2()}}) {
    RepCategory rc(nq.quiver, 2);
    HallAlgebra h(rc);
    const ComplexCategory& cc = h.complexes();
    int n = rc.num_vertices();
    int checked = 0;
    for (const auto& sd : sub_dimensions(std::vector<int>(2 * n, 2))) {
      DimVec d0(sd.begin(), sd.begin() + n), d1(sd.begin() + n, sd.end());
      if (total(d0) + total(d1) > 2) continue;
      for (const auto& c : cc.enumerate(d0, d1)) {
        Cx l = cc.representative(c);
        for_each_acyclic_kernel(cc, l, [&](const Cx& k, const Cx& m) {
          EXPECT_EQ(h.reduce(l), h.reduce(cc.sum(k, m))) << nq.name;
          ++checked;
        });
      }
    }
    EXPECT_GT(checked, 10);
  }
}

TEST(Reduce, NormalFormsAreFixed) {
  RepCategory rc(kronecker(), 2);
  HallAlgebra h(rc);
  const ComplexCategory& cc = h.complexes();
  for (const auto& a : rc.enumerate({1, 1}))
    for (const auto& b : rc.enumerate({0, 1})) {
      NormalBasisElt nb{a, b, {1, 0}, {0, 1}};
      SDHElem x = h.basis(nb);
      Cx ca = cc.sum(cc.C(rc.representative(a)), cc.Cstar(rc.representative(b)));
      SDHElem y = h.mul(h.mul(h.cx_product(ca, cc.zero()), h.reduce(cc.K(rc.simple(0)))),
                        h.reduce(cc.Kstar(rc.simple(1))));
      EXPECT_EQ(x, y);
    }
}

TEST(Multiply, UnitAndKGroup) {
  RepCategory rc(loop_arrow(), 2);
  HallAlgebra h(rc);
  SDHElem c = h.C(rc.classify(rc.simple(1)));
  EXPECT_EQ(h.mul(h.unit(), c), c);
  EXPECT_EQ(h.mul(c, h.unit()), c);
  EXPECT_EQ(h.mul(h.K({1, 0}), h.K({0, 2})), h.K({1, 2}));
  EXPECT_EQ(h.mul(h.K({1, -1}), h.Kstar({2, 1})), h.mul(h.Kstar({2, 1}), h.K({1, -1})));
  SDHElem kk = h.mul(h.K({1, -1}), h.Kstar({0, 3}));
  EXPECT_EQ(h.mul(kk, h.k_inverse(kk)), h.unit());
  EXPECT_EQ(h.mul(h.basis({rc.zero_class(), rc.zero_class(), {1, 2}, {3, -1}}),
                  h.basis({rc.zero_class(), rc.zero_class(), {-1, -2}, {-3, 1}})),
            h.unit());
}

TEST(Multiply, KCommutationByComplexProducts) {
  for (const auto& nq : test_quivers()) {
    RepCategory rc(nq.quiver, 2);
    HallAlgebra h(rc);
    const ComplexCategory& cc = h.complexes();
    const CartanData& cd = rc.cartan();
    int n = rc.num_vertices();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int mult = 1; mult <= 2; ++mult) {
          Rep m = rc.semisimple(unit_vec(n, j, mult));
          Rep s = rc.simple(i);
          DimVec a = unit_vec(n, i);
          int e = cd.form(a, m.dims);
          Scalar p = vp(e, 2), pinv = vp(-e, 2);
          // independent: raw Hall products of K_{S_i} with the stalk complexes
          EXPECT_EQ(h.cx_product(cc.K(s), cc.C(m)), p * h.cx_product(cc.C(m), cc.K(s))) << nq.name;
          EXPECT_EQ(h.cx_product(cc.K(s), cc.Cstar(m)), pinv * h.cx_product(cc.Cstar(m), cc.K(s))) << nq.name;
          EXPECT_EQ(h.cx_product(cc.Kstar(s), cc.C(m)), pinv * h.cx_product(cc.C(m), cc.Kstar(s))) << nq.name;
          EXPECT_EQ(h.cx_product(cc.Kstar(s), cc.Cstar(m)), p * h.cx_product(cc.Cstar(m), cc.Kstar(s))) << nq.name;
          // the phase rule of mul agrees, for alpha and -alpha
          IsoClass mc = rc.classify(m);
          EXPECT_EQ(h.mul(h.K(a), h.C(mc)), h.cx_product(cc.K(s), cc.C(m)));
          EXPECT_EQ(h.mul(h.C(mc), h.Kstar(a)), h.cx_product(cc.C(m), cc.Kstar(s)));
          EXPECT_EQ(h.mul(h.K(-a), h.C(mc)), pinv * h.mul(h.C(mc), h.K(-a)));
          EXPECT_EQ(h.mul(h.Kstar(-a), h.Cstar(mc)), pinv * h.mul(h.Cstar(mc), h.Kstar(-a)));
          EXPECT_EQ(h.mul(h.K(-a), h.cx_product(cc.K(s), cc.C(m))), h.C(mc));
          EXPECT_EQ(h.mul(h.cx_product(cc.C(m), cc.K(s)), h.K(-a)), h.C(mc));
        }
  }
}

TEST(Multiply, CPartMatchesSubcomplexCounts) {
  for (const auto& nq : {NamedQuiver{"jordan", jordan()}, NamedQuiver{"a2", a2()},
                         NamedQuiver{"loop_arrow", loop_arrow()}}) {
    RepCategory rc(nq.quiver, 2);
    HallAlgebra h(rc);
    const ComplexCategory& cc = h.complexes();
    std::vector<Cx> parts;
    for (int i = 0; i < rc.num_vertices(); ++i) {
      Rep s = rc.simple(i);
      parts.push_back(cc.C(s));
      parts.push_back(cc.Cstar(s));
      parts.push_back(cc.K(s));
      parts.push_back(cc.sum(cc.C(s), cc.Cstar(s)));
    }
    for (const auto& l : parts)
      for (const auto& m : parts) {
        if (total(cc.res_dim(l)) + total(cc.res_dim(m)) > 3) continue;
        EXPECT_EQ(h.cx_product(l, m), product_by_subcomplexes(h, l, m)) << nq.name;
        EXPECT_EQ(h.cx_product(l, m, Exec::parallel), h.cx_product(l, m)) << nq.name;
      }
  }
}

TEST(Multiply, DividedPowers) {
  for (int q : {2, 3}) {
    RepCategory rc(a2(), q);
    HallAlgebra h(rc);
    SDHElem c = h.C(rc.classify(rc.simple(0)));
    EXPECT_EQ(h.divided_power_CS(0, 0, false), h.unit());
    EXPECT_EQ(h.divided_power_CS(0, 1, false), c);
    for (int r = 2; r <= 3; ++r) {
      EXPECT_EQ(h.pow(c, r), qfact(r, q) * h.divided_power_CS(0, r, false));
      SDHElem cs = h.Cstar(rc.classify(rc.simple(0)));
      EXPECT_EQ(h.pow(cs, r), qfact(r, q) * h.divided_power_CS(0, r, true));
    }
  }
  RepCategory j(jordan(), 2);
  EXPECT_THROW(HallAlgebra(j).divided_power_CS(0, 2, false), DomainError);
}

TEST(Multiply, BracketNormalisation) {
  RepCategory rc(two_points(), 3);
  HallAlgebra h(rc);
  IsoClass s = rc.classify(rc.simple(0));
  IsoClass s2 = rc.classify(rc.semisimple({2, 0}));
  EXPECT_EQ(h.bracket(rc.zero_class(), false), h.unit());
  EXPECT_EQ(h.bracket(s, false), Scalar(Rational(1, 2)) * h.C(s));
  EXPECT_EQ(h.bracket(s2, true), Scalar(Rational(1, 48)) * h.Cstar(s2));
}

TEST(Multiply, AssociativeOnGenerators) {
  for (const auto& nq : {NamedQuiver{"jordan", jordan()}, NamedQuiver{"a2", a2()}}) {
    RepCategory rc(nq.quiver, 2);
    HallAlgebra h(rc);
    int n = rc.num_vertices();
    std::vector<SDHElem> gens;
    for (int i = 0; i < n; ++i) {
      IsoClass s = rc.classify(rc.simple(i));
      gens.push_back(h.C(s));
      gens.push_back(h.Cstar(s));
      gens.push_back(h.K(unit_vec(n, i)));
      gens.push_back(h.Kstar(unit_vec(n, i)));
    }
    for (const auto& x : gens)
      for (const auto& y : gens)
        for (const auto& z : gens) EXPECT_EQ(h.mul(h.mul(x, y), z), h.mul(x, h.mul(y, z))) << nq.name;
  }
}

TEST(Multiply, MixedProductAgainstDirectComplexProduct) {
  // [C_S]*[C*_S] through mul equals the Hall product of the two stalk complexes.
  RepCategory rc(jordan(), 2);
  HallAlgebra h(rc);
  const ComplexCategory& cc = h.complexes();
  Rep s = rc.simple(0);
  IsoClass sc = rc.classify(s);
  EXPECT_EQ(h.mul(h.C(sc), h.Cstar(sc)), h.cx_product(cc.C(s), cc.Cstar(s)));
  EXPECT_EQ(h.mul(h.Cstar(sc), h.C(sc)), h.cx_product(cc.Cstar(s), cc.C(s)));
  EXPECT_GT(h.cache_size(), 0u);
}

TEST(Json, RoundTrip) {
  RepCategory rc(kronecker(), 3);
  HallAlgebra h(rc);
  IsoClass x = rc.enumerate({1, 1})[1];
  SDHElem e = vp(3, 3) * h.basis({x, rc.classify(rc.simple(0)), {1, -2}, {0, 1}}) + h.K({1, 1});
  EXPECT_EQ(h.from_json(h.to_json(e)), e);
  EXPECT_THROW(h.from_json(nlohmann::json::object()), ConfigError);
  EXPECT_THROW(h.from_json(nlohmann::json::parse(R"([{"A":"x"}])")), ConfigError);
}
