#include <gtest/gtest.h>

#include <random>

#include "hallforge/error.hpp"
#include "hallforge/qcomb.hpp"
#include "hallforge/repcat.hpp"
#include "oracles.hpp"
#include "test_quivers.hpp"

using namespace hallforge;
using namespace hallforge::testing;

namespace {

std::vector<DimVec> dims_up_to(int n, int max_total) {
  std::vector<DimVec> out;
  if (n == 1) {
    for (int a = 0; a <= max_total; ++a) out.push_back({a});
  } else {
    for (int a = 0; a <= max_total; ++a)
      for (int b = 0; a + b <= max_total; ++b) out.push_back({a, b});
  }
  return out;
}

}  // namespace

TEST(Enumerate, Examples) {
  RepCategory a2c(a2(), 2);
  EXPECT_EQ(a2c.enumerate({1, 0}).size(), 1u);
  EXPECT_EQ(a2c.enumerate({0, 1}).size(), 1u);
  EXPECT_EQ(a2c.enumerate({1, 1}).size(), 2u);
  for (int q : {2, 3}) {
    RepCategory j(jordan(), q);
    EXPECT_EQ(j.enumerate({2}).size(), 2u);
    EXPECT_EQ(j.enumerate({3}).size(), 3u);
  }
  EXPECT_EQ(RepCategory(jordan(), 2, Mode::full).enumerate({1}).size(), 2u);
  EXPECT_EQ(RepCategory(jordan(), 3, Mode::full).enumerate({1}).size(), 3u);
  // conjugacy classes of 2x2 matrices over F_q number q^2 + q
  EXPECT_EQ(RepCategory(jordan(), 2, Mode::full).enumerate({2}).size(), 6u);
  EXPECT_EQ(RepCategory(jordan(), 3, Mode::full).enumerate({2}).size(), 12u);
}

TEST(Enumerate, OrbitCountMatchesBurnside) {
  for (int q : {2, 3})
    for (const auto& nq : test_quivers())
      for (Mode mode : {Mode::nilpotent, Mode::full}) {
        RepCategory rc(nq.quiver, q, mode);
        for (const auto& d : dims_up_to(nq.quiver.num_vertices(), q == 2 ? 3 : 2)) {
          if (entry_count(rc.presentation(), d) > 8) continue;
          EXPECT_EQ(static_cast<std::uint64_t>(rc.enumerate(d).size()),
                    burnside_orbit_count(rc.presentation(), rc.field(), d, rc.catalog()))
              << nq.name << " q=" << q << " " << format_dims(d) << " " << mode_name(mode);
        }
      }
}

TEST(Enumerate, SameIdIffIsomorphic) {
  std::mt19937 rng(1);
  for (const auto& nq : test_quivers()) {
    RepCategory rc(nq.quiver, 2);
    for (const auto& d : dims_up_to(nq.quiver.num_vertices(), 3)) {
      const OrbitTable& t = rc.catalog().table(d);
      std::vector<Rep> valid;
      for (std::uint64_t c = 0; c < t.space; ++c)
        if (t.class_of[c] >= 0) valid.push_back(decode(rc.presentation(), d, c, 2));
      if (valid.empty()) continue;
      std::uniform_int_distribution<size_t> pick(0, valid.size() - 1);
      for (int trial = 0; trial < 15; ++trial) {
        const Rep& x = valid[pick(rng)];
        const Rep& y = valid[pick(rng)];
        EXPECT_EQ(rc.classify(x) == rc.classify(y), rc.isomorphic(x, y)) << nq.name;
      }
    }
  }
}

TEST(Enumerate, BoundsAreEnforced) {
  Bounds b;
  b.max_total_dim = 2;
  RepCategory rc(jordan(), 2, Mode::nilpotent, b);
  EXPECT_THROW(rc.enumerate({3}), ResourceError);
  Bounds c;
  c.max_code_bits = 6;
  RepCategory rk(kronecker(), 2, Mode::nilpotent, c);
  EXPECT_THROW(rk.enumerate({2, 2}), ResourceError);
}

TEST(Enumerate, ParallelTableMatchesSerial) {
  RepCategory rc(two_loop(), 2);
  Presentation p = rc.presentation();
  auto valid = [&](const Rep& r) { return rc.is_valid(r); };
  omp_set_num_threads(4);
  OrbitTable s = build_orbit_table(p, rc.field(), {3}, valid, Exec::serial);
  OrbitTable t = build_orbit_table(p, rc.field(), {3}, valid, Exec::parallel);
  EXPECT_EQ(s.class_of, t.class_of);
  EXPECT_EQ(s.size(), t.size());
}

TEST(HomExt, Examples) {
  RepCategory rc(a2(), 3);
  Rep s1 = rc.simple(0), s2 = rc.simple(1);
  EXPECT_EQ(rc.hom_dim(s1, s1), 1);
  EXPECT_EQ(rc.hom_dim(s1, s2), 0);
  EXPECT_EQ(rc.ext1_dim(s1, s2), 1);
  EXPECT_EQ(rc.ext1_dim(s2, s1), 0);
  for (int r = 0; r <= 2; ++r) {
    Rep x = rc.semisimple({r, 0});
    EXPECT_EQ(rc.aut_size_bruteforce(x), gl_size(r, 3));
    EXPECT_EQ(rc.aut_size(rc.classify(x)), gl_size(r, 3));
  }
}

TEST(HomExt, HereditaryFormulaMatchesCocycles) {
  for (const auto& nq : test_quivers()) {
    RepCategory rc(nq.quiver, 2);
    int n = nq.quiver.num_vertices();
    for (const auto& dx : dims_up_to(n, 2))
      for (const auto& dz : dims_up_to(n, 2)) {
        if (total(dx) + total(dz) > 3) continue;
        for (const auto& cx : rc.enumerate(dx))
          for (const auto& cz : rc.enumerate(dz)) {
            Rep x = rc.representative(cx), z = rc.representative(cz);
            EXPECT_EQ(rc.ext1_dim(x, z), rc.ext1_dim_direct(x, z)) << nq.name;
            EXPECT_GE(rc.hom_dim(x, x), total(dx) > 0 ? 1 : 0);
          }
      }
  }
}

TEST(HomExt, AutomorphismsOrbitStabiliser) {
  for (const auto& nq : test_quivers())
    for (int q : {2, 3}) {
      RepCategory rc(nq.quiver, q);
      for (const auto& d : dims_up_to(nq.quiver.num_vertices(), 2))
        for (const auto& c : rc.enumerate(d))
          EXPECT_EQ(rc.aut_size(c), rc.aut_size_bruteforce(rc.representative(c))) << nq.name;
    }
}

TEST(HallNumber, Examples) {
  for (int q : {2, 3}) {
    RepCategory rc(a2(), q);
    IsoClass s = rc.classify(rc.simple(0));
    IsoClass ss = rc.classify(rc.semisimple({2, 0}));
    EXPECT_EQ(rc.hall_number(s, s, ss), q + 1);
    EXPECT_EQ(rc.hall_number(rc.zero_class(), ss, ss), 1);
    EXPECT_EQ(rc.hall_number(ss, rc.zero_class(), ss), 1);
    RepCategory j(jordan(), q);
    Rep block = j.zero({2});
    block.maps[0](0, 1) = 1;
    IsoClass sj = j.classify(j.simple(0));
    EXPECT_EQ(j.hall_number(sj, sj, j.classify(block)), 1);
    EXPECT_EQ(j.hall_number(sj, sj, j.classify(j.semisimple({2}))), q + 1);
  }
}

TEST(HallNumber, ParallelMatchesSerial) {
  omp_set_num_threads(3);
  RepCategory rc(kronecker(), 2);
  for (const auto& y : rc.enumerate({2, 1}))
    for (const auto& x : rc.enumerate({1, 1}))
      for (const auto& z : rc.enumerate({1, 0}))
        EXPECT_EQ(rc.hall_number(x, z, y, Exec::serial), rc.hall_number(x, z, y, Exec::parallel));
  Rep a = rc.representative(rc.enumerate({1, 1})[1]);
  EXPECT_EQ(rc.extension_weights(a, a, Exec::serial), rc.extension_weights(a, a, Exec::parallel));
}

TEST(HallProduct, Examples) {
  for (int q : {2, 3}) {
    RepCategory rc(a2(), q);
    IsoClass s = rc.classify(rc.simple(0));
    ModElem one{{rc.zero_class(), Scalar(1)}};
    ModElem xs{{s, Scalar(1)}};
    EXPECT_EQ(rc.hall_product(one, xs, false), xs);
    EXPECT_EQ(rc.hall_product(xs, one, false), xs);
    ModElem sq = rc.hall_product(xs, xs, false);
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq.begin()->first, rc.classify(rc.semisimple({2, 0})));
    EXPECT_EQ(sq.begin()->second, Scalar(Rational(1, q)));
    RepCategory j(jordan(), q);
    IsoClass sj = j.classify(j.simple(0));
    ModElem js = j.hall_product({{sj, Scalar(1)}}, {{sj, Scalar(1)}}, false);
    EXPECT_EQ(js.size(), 2u);
    for (const auto& [c, w] : js) EXPECT_EQ(c.dim, (DimVec{2}));
  }
}

TEST(HallProduct, RiedtmannPengSmall) {
  RepCategory rc(loop_arrow(), 2);
  for (const auto& dx : dims_up_to(2, 2))
    for (const auto& dz : dims_up_to(2, 2)) {
      if (total(dx) + total(dz) > 3) continue;
      for (const auto& cx : rc.enumerate(dx))
        for (const auto& cz : rc.enumerate(dz)) {
          ModElem subobjects = rc.hall_product({{cx, Scalar(1)}}, {{cz, Scalar(1)}}, false);
          auto ext = rc.extension_weights(rc.representative(cx), rc.representative(cz));
          ModElem direct;
          for (const auto& [y, w] : ext) direct[y] = Scalar::rational(w, 2);
          EXPECT_EQ(subobjects, direct);
        }
    }
}

TEST(HallProduct, Associative) {
  for (const auto& nq : {NamedQuiver{"jordan", jordan()}, NamedQuiver{"a2", a2()}}) {
    RepCategory rc(nq.quiver, 2);
    int n = nq.quiver.num_vertices();
    std::vector<IsoClass> small;
    for (const auto& d : dims_up_to(n, 1))
      for (const auto& c : rc.enumerate(d)) small.push_back(c);
    for (const auto& a : small)
      for (const auto& b : small)
        for (const auto& c : small) {
          ModElem x{{a, Scalar(1)}}, y{{b, Scalar(1)}}, z{{c, Scalar(1)}};
          EXPECT_EQ(rc.hall_product(rc.hall_product(x, y, true), z, true),
                    rc.hall_product(x, rc.hall_product(y, z, true), true));
        }
  }
}

TEST(Ids, RoundTripAndErrors) {
  RepCategory rc(kronecker(), 3);
  for (const auto& c : rc.enumerate({1, 1})) EXPECT_EQ(rc.parse_id(rc.id(c)), c);
  RepCategory other(a2(), 3);
  EXPECT_THROW(rc.parse_id(other.id(other.zero_class())), ConfigError);
  EXPECT_THROW(rc.parse_id("nonsense"), ConfigError);
  EXPECT_THROW(rc.parse_id(rc.hash() + ":1,1:99"), ConfigError);
}

TEST(Reps, SimpleWithParametersAndJson) {
  RepCategory rc(jordan(), 3, Mode::full);
  Rep s1 = rc.simple(0, {1});
  Rep s2 = rc.simple(0, {2});
  EXPECT_NE(rc.classify(s1), rc.classify(s2));
  EXPECT_EQ(rc.rep_from_json(rc.rep_to_json(s1)), s1);
  RepCategory nil(jordan(), 3);
  EXPECT_THROW(nil.rep_from_json(rc.rep_to_json(s1)), ConfigError);
  EXPECT_THROW(rc.simple(0, {1, 1}), ConfigError);
}
