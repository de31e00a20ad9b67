#include <gtest/gtest.h>

#include "hallforge/error.hpp"
#include "hallforge/quiver.hpp"
#include "test_quivers.hpp"

using namespace hallforge;
using namespace hallforge::testing;

TEST(Cartan, Examples) {
  EXPECT_EQ(cartan_from_quiver(jordan()).a, (std::vector<std::vector<int>>{{0}}));
  EXPECT_EQ(cartan_from_quiver(two_loop()).a, (std::vector<std::vector<int>>{{-2}}));
  EXPECT_EQ(cartan_from_quiver(kronecker()).a, (std::vector<std::vector<int>>{{2, -2}, {-2, 2}}));
  EXPECT_EQ(cartan_from_quiver(a2()).a, (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(cartan_from_quiver(loop_arrow()).a, (std::vector<std::vector<int>>{{0, -1}, {-1, 2}}));
}

TEST(Cartan, RealAndImaginary) {
  CartanData c = cartan_from_quiver(loop_arrow());
  EXPECT_FALSE(c.is_real(0));
  EXPECT_TRUE(c.is_imaginary(0));
  EXPECT_TRUE(c.is_real(1));
  EXPECT_EQ(c.max_level(0, 3), 3);
  EXPECT_EQ(c.max_level(1, 3), 1);
}

TEST(Euler, Examples) {
  EXPECT_EQ(euler_form(jordan(), {1}, {1}), 0);
  EXPECT_EQ(euler_form(a2(), {1, 0}, {0, 1}), -1);
  EXPECT_EQ(euler_form(a2(), {0, 1}, {1, 0}), 0);
  for (const auto& nq : test_quivers()) {
    DimVec x(nq.quiver.num_vertices(), 2);
    EXPECT_EQ(euler_form(nq.quiver, x, DimVec(x.size(), 0)), 0);
  }
}

TEST(Euler, SymmetrisationIsCartanMatrix) {
  for (const auto& nq : test_quivers()) {
    CartanData c = cartan_from_quiver(nq.quiver);
    int n = nq.quiver.num_vertices();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        EXPECT_EQ(sym_form(nq.quiver, unit_vec(n, i), unit_vec(n, j)), c.a[i][j]) << nq.name;
  }
}

TEST(Reflection, SimpleReflection) {
  CartanData c = cartan_from_quiver(a2());
  EXPECT_EQ(c.reflect(0, {1, 0}), (DimVec{-1, 0}));
  EXPECT_EQ(c.reflect(0, {0, 1}), (DimVec{1, 1}));
  CartanData t = cartan_from_quiver(two_points());
  EXPECT_EQ(t.reflect(0, {0, 1}), (DimVec{0, 1}));
  EXPECT_THROW(cartan_from_quiver(loop_arrow()).reflect(0, {1, 0}), DomainError);
}

TEST(Reflection, InvolutionPreservingForm) {
  for (const auto& nq : test_quivers()) {
    CartanData c = cartan_from_quiver(nq.quiver);
    int n = c.size();
    for (int i = 0; i < n; ++i) {
      if (!c.is_real(i)) continue;
      for (int x0 = -2; x0 <= 2; ++x0)
        for (int x1 = -2; x1 <= 2; ++x1) {
          DimVec x = n == 1 ? DimVec{x0} : DimVec{x0, x1};
          DimVec y = n == 1 ? DimVec{x1} : DimVec{x1, x0};
          EXPECT_EQ(c.reflect(i, c.reflect(i, x)), x);
          EXPECT_EQ(c.form(c.reflect(i, x), c.reflect(i, y)), c.form(x, y));
          EXPECT_EQ(c.form(x, y), sym_form(nq.quiver, x, y));
        }
    }
  }
}

TEST(ReflectQuiver, ReversesIncidentArrows) {
  Quiver r = reflect_quiver(a2(), 1);
  EXPECT_EQ(r.arrows(), (std::vector<Arrow>{{1, 0}}));
  EXPECT_EQ(reflect_quiver(r, 1), a2());
  Quiver la = reflect_quiver(loop_arrow(), 1);
  EXPECT_EQ(la.arrows(), (std::vector<Arrow>{{0, 0}, {1, 0}}));
  EXPECT_TRUE(a2().is_sink(1));
  EXPECT_FALSE(a2().is_sink(0));
  EXPECT_TRUE(a2().is_source(0));
  EXPECT_FALSE(jordan().is_sink(0));
  for (const auto& nq : test_quivers())
    for (int l = 0; l < nq.quiver.num_vertices(); ++l)
      EXPECT_EQ(cartan_from_quiver(reflect_quiver(nq.quiver, l)).a, cartan_from_quiver(nq.quiver).a);
}

TEST(QuiverJson, RoundTripAndErrors) {
  Quiver q = loop_arrow();
  EXPECT_EQ(Quiver::from_json(q.to_json()), q);
  EXPECT_EQ(q.to_json().dump(),
            R"({"arrows":[{"src":"1","tgt":"1"},{"src":"1","tgt":"2"}],"vertices":["1","2"]})");
  EXPECT_THROW(Quiver::from_json(nlohmann::json::parse(R"({"vertices":["1","1"]})")), ConfigError);
  EXPECT_THROW(Quiver::from_json(nlohmann::json::parse(R"({"vertices":["1"],"arrows":[{"src":"1","tgt":"3"}]})")),
               ConfigError);
  EXPECT_THROW(Quiver::from_json(nlohmann::json::parse(R"([1,2])")), ConfigError);
  EXPECT_NE(a2().hash(), kronecker().hash());
  EXPECT_EQ(a2().hash().size(), 16u);
}
