#include <gtest/gtest.h>

#include <random>

#include "dalg/error.hpp"
#include "support.hpp"

using namespace dalg;
using namespace dalg::testing;

TEST(DiffPoly, CancellationGivesZero) {
  auto r = ring_q();
  EXPECT_TRUE((P(r, "y + 1") - P(r, "y + 1")).is_zero());
  EXPECT_TRUE((P(r, "y + 1") - P(r, "y + 1")).terms().empty());
}

TEST(DiffPoly, FrobeniusSquareOverF2) {
  auto r = ring_fp(2);
  EXPECT_EQ(P(r, "(y + y')^2"), P(r, "y^2 + y'^2"));
}

TEST(DiffPoly, ProductIsSingleMonomial) {
  auto r = ring_q();
  const DiffPoly f = P(r, "y") * P(r, "y'");
  ASSERT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.terms()[0].mono.degree_in(DerivVar{0, DerivOp()}), 1u);
  EXPECT_EQ(f.terms()[0].mono.degree_in(DerivVar{0, DerivOp::single(0)}), 1u);
  EXPECT_TRUE(r->base().is_one(f.terms()[0].coeff));
}

TEST(DiffPoly, DeriveSquare) {
  EXPECT_EQ(P(ring_q(), "y^2").derive(0), P(ring_q(), "2*y*y'"));
  EXPECT_TRUE(P(ring_fp(2), "y^2").derive(0).is_zero());
}

TEST(DiffPoly, DeriveAcrossCoefficient) {
  auto r = ring_qt();
  EXPECT_EQ(P(r, "t*y").derive(0), P(r, "y + t*y'"));
}

TEST(DiffPoly, DerivationIndexChecked) {
  auto r = ring_q(2, 1);
  EXPECT_THROW(P(r, "y0").derive(2), Error);
}

TEST(DiffPoly, Substitute) {
  auto r = ring_q();
  const DerivVar y1{0, DerivOp::single(0)}, y2{0, DerivOp::single(0, 2)};
  EXPECT_EQ(P(r, "y'^2 - y").substitute({{y1, DiffPoly::integer(r, 2)}}), P(r, "4 - y"));
  EXPECT_EQ(P(r, "y'^2 - y").substitute({}), P(r, "y'^2 - y"));
  EXPECT_EQ(P(r, "y*y''").substitute({{y2, P(r, "y' + 1")}}), P(r, "y*y' + y"));
}

TEST(DiffPoly, DegreesAndVariables) {
  auto r = ring_q();
  const DiffPoly f = P(r, "y'^2 - 4*y");
  EXPECT_EQ(f.degree_in(DerivVar{0, DerivOp::single(0)}), 2u);
  EXPECT_FALSE(f.appears(DerivVar{0, DerivOp::single(0, 2)}));
  const auto vars = P(r, "y*y'' + 1").variables();
  ASSERT_EQ(vars.size(), 2u);
  EXPECT_EQ(vars[0], (DerivVar{0, DerivOp()}));
  EXPECT_EQ(vars[1], (DerivVar{0, DerivOp::single(0, 2)}));
}

TEST(DiffPoly, RingMismatch) {
  EXPECT_THROW(P(ring_q(), "y") + P(ring_fp(3), "y"), Error);
  EXPECT_THROW(P(ring_q(1, 1), "y") * P(ring_q(1, 2), "y0"), Error);
}

TEST(DiffPoly, ProperDerivativeIsStrictPartialOrder) {
  const DerivVar a{0, DerivOp::from_exponents({1, 0})}, b{0, DerivOp::from_exponents({1, 1})},
      c{1, DerivOp::from_exponents({1, 1})};
  EXPECT_TRUE(is_proper_derivative(b, a));
  EXPECT_FALSE(is_proper_derivative(a, b));
  EXPECT_FALSE(is_proper_derivative(a, a));
  EXPECT_FALSE(is_proper_derivative(c, a));
}

struct PropertyCase {
  DiffRingPtr ring;
  std::uint64_t p;
};

class DiffPolyProperties : public ::testing::TestWithParam<int> {};

TEST_P(DiffPolyProperties, DerivationLaws) {
  const int which = GetParam();
  const std::vector<PropertyCase> cases = {{ring_q(2, 2), 0}, {ring_fp(3, 2, 2), 3}, {ring_qt(2, 1), 0},
                                           {ring_fp(2, 1, 2), 2}, {ring_qt(1, 2, 5), 5}};
  const PropertyCase& pc = cases[static_cast<std::size_t>(which)];
  std::mt19937_64 rng(99 + which);
  RandomPolyShape shape{2, 2, 3, 4};
  for (int trial = 0; trial < 25; ++trial) {
    const DiffPoly f = random_poly(rng, pc.ring, shape);
    const DiffPoly g = random_poly(rng, pc.ring, shape);
    for (std::uint32_t i = 0; i < pc.ring->m(); ++i) {
      EXPECT_EQ((f * g).derive(i), f.derive(i) * g + f * g.derive(i));
      EXPECT_EQ((f + g).derive(i), f.derive(i) + g.derive(i));
      for (std::uint32_t j = 0; j < pc.ring->m(); ++j) EXPECT_EQ(f.derive(i).derive(j), f.derive(j).derive(i));
      if (pc.p != 0) {
        EXPECT_TRUE(f.pow(static_cast<std::uint32_t>(pc.p)).derive(i).is_zero());
      }
    }
    std::map<DerivVar, DiffPoly> sigma;
    for (const auto& v : f.variables())
      if (rng() % 2) sigma.emplace(v, random_poly(rng, pc.ring, {1, 1, 2, 3}));
    EXPECT_EQ((f + g).substitute(sigma), f.substitute(sigma) + g.substitute(sigma));
    EXPECT_EQ((f * g).substitute(sigma), f.substitute(sigma) * g.substitute(sigma));
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, DiffPolyProperties, ::testing::Range(0, 5));
