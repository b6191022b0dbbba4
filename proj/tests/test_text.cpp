#include <gtest/gtest.h>

#include <random>

#include "dalg/error.hpp"
#include "dalg/reduction.hpp"
#include "support.hpp"

using namespace dalg;
using namespace dalg::testing;

TEST(Text, ShorthandDenotation) {
  auto q = ring_q();
  const DerivVar y{0, DerivOp()}, y1{0, DerivOp::single(0)};
  const DiffPoly expect = DiffPoly::variable(q, y1, 2) - DiffPoly::variable(q, y).scaled(q->base().from_int(4));
  EXPECT_EQ(P(q, "y'^2 - 4*y"), expect);
}

TEST(Text, GeneralDerivativeSyntax) {
  auto r = ring_q(2, 2);
  const DiffPoly f = P(r, "d0^2 d1 y1");
  ASSERT_EQ(f.variables().size(), 1u);
  EXPECT_EQ(f.variables()[0], (DerivVar{1, DerivOp::from_exponents({2, 1})}));
  EXPECT_EQ(P(r, "d0^2 d1 y1 ^3"), f.pow(3));
  EXPECT_EQ(P(r, "d1 d0 d0 y1"), f);
}

TEST(Text, IndexErrors) {
  try {
    P(ring_q(1, 2), "y0 + y2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW(P(ring_q(2, 1), "d2 y0"), Error);
}

TEST(Text, SyntaxErrorsCarryPosition) {
  try {
    P(ring_q(), "y + * y");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P(ring_q(), "y'' y"), SyntaxError);
  EXPECT_THROW(P(ring_q(), "(y"), SyntaxError);
  EXPECT_THROW(P(ring_q(), "y / y"), SyntaxError);
  EXPECT_THROW(P(ring_q(), "t*y"), SyntaxError);
  EXPECT_THROW(P(ring_q(1, 2), "y'"), SyntaxError);
  EXPECT_THROW(P(ring_q(), "y/0"), Error);
  EXPECT_THROW(P(ring_q(), ""), SyntaxError);
}

TEST(Text, Printing) {
  auto q = ring_q();
  EXPECT_EQ(to_text(DiffPoly(q)), "0");
  EXPECT_EQ(to_text(ritt_reduce(P(q, "y''"), AutoreducedSet({P(q, "y'^2 - 4*y")})).remainder), "4*y'");
  EXPECT_EQ(to_text(P(q, "-y + y'^2*y - 3/4")), "y'^2*y - y - 3/4");
  EXPECT_EQ(to_text(P(ring_fp(5), "-y")), "4*y");
  EXPECT_EQ(to_text(P(ring_q(2, 2), "d1 d0^2 y1^3 - y0")), "d0^2 d1 y1^3 - y0");
  EXPECT_EQ(to_text(P(ring_qt(), "(t^2 - 1)/(t - 1)*y - t")), "(t + 1)*y - t");
  EXPECT_EQ(to_text(P(ring_qt(), "-y/(2*t)")), "-1/2/t*y");
}

class TextRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(TextRoundTrip, ParseOfPrintIsIdentity) {
  const int which = GetParam();
  const std::vector<DiffRingPtr> rings = {ring_q(),     ring_fp(3),      ring_q(2, 2),
                                          ring_qt(1, 1), ring_qt(2, 2, 5), ring_fp(2, 2, 1)};
  auto ring = rings[static_cast<std::size_t>(which)];
  std::mt19937_64 rng(7 + which);
  for (int trial = 0; trial < 200; ++trial) {
    const DiffPoly f = random_poly(rng, ring, {3, 3, 5, 9});
    const std::string text = to_text(f);
    EXPECT_EQ(P(ring, text), f) << text;
    EXPECT_EQ(to_text(P(ring, text)), text);
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, TextRoundTrip, ::testing::Range(0, 6));

TEST(Config, ParsesKeys) {
  const auto cfg = parse_config("# comment\ncharacteristic = 3\nm = 1\nn = 2\ngen = d0 y0 - y1\nextra = y1\n");
  EXPECT_EQ(cfg.spec.kind, BaseKind::PrimeField);
  EXPECT_EQ(cfg.spec.characteristic, 3u);
  EXPECT_EQ(cfg.n, 2u);
  ASSERT_EQ(cfg.generators.size(), 1u);
  EXPECT_EQ(cfg.generators[0], "d0 y0 - y1");
  EXPECT_EQ(cfg.extras.size(), 1u);
  const auto dflt = parse_config("");
  EXPECT_EQ(dflt.spec.kind, BaseKind::Rationals);
  EXPECT_EQ(dflt.n, 1u);
  EXPECT_THROW(parse_config("characteristic = 4"), Error);
  EXPECT_THROW(parse_config("bogus = 1"), SyntaxError);
  EXPECT_THROW(parse_config("kind = rationals\ncharacteristic = 5"), Error);
  const auto rf = parse_config("kind = rational-functions\ncharacteristic = 7\nm = 2");
  EXPECT_EQ(rf.spec.kind, BaseKind::RationalFunctions);
}
