#include <gtest/gtest.h>

#include <random>

#include "dalg/base_ring.hpp"
#include "dalg/error.hpp"
#include "support.hpp"

using namespace dalg;
using dalg::testing::random_coeff;

namespace {

BaseRing qt(std::uint32_t m = 1, std::uint64_t p = 0) { return BaseRing({BaseKind::RationalFunctions, p, m}); }

BaseElem T(const BaseRing& R, std::uint32_t i = 0) { return R.parameter(i); }

}  // namespace

TEST(BaseRing, PrimeFieldAddition) {
  BaseRing F5({BaseKind::PrimeField, 5, 1});
  EXPECT_EQ(F5.add(F5.from_int(3), F5.from_int(4)), F5.from_int(2));
  EXPECT_EQ(F5.from_int(-1).constant(), mpq_class(4));
}

TEST(BaseRing, RationalInverse) {
  BaseRing Q({BaseKind::Rationals, 0, 1});
  EXPECT_EQ(Q.inv(Q.from_rational(mpq_class(2, 3))), Q.from_rational(mpq_class(3, 2)));
  EXPECT_THROW(Q.inv(Q.zero()), Error);
}

TEST(BaseRing, RationalFunctionCanonicalizes) {
  BaseRing R = qt();
  const BaseElem t = T(R);
  const BaseElem num = R.sub(R.mul(t, t), R.one());
  const BaseElem den = R.sub(t, R.one());
  const BaseElem q = R.div(num, den);
  EXPECT_EQ(q, R.add(t, R.one()));
  EXPECT_TRUE(q.rational_function().den().is_constant());
}

TEST(BaseRing, DenominatorIsMonic) {
  BaseRing R = qt();
  const BaseElem q = R.div(R.one(), R.mul(R.from_int(-3), T(R)));
  EXPECT_EQ(q.rational_function().den().leading_coeff(), mpq_class(1));
  EXPECT_EQ(q.rational_function().num().leading_coeff(), mpq_class(-1, 3));
}

TEST(BaseRing, ConstantDerivationsVanish) {
  BaseRing Q({BaseKind::Rationals, 0, 2});
  EXPECT_TRUE(Q.is_zero(Q.derive(1, Q.from_rational(mpq_class(7, 2)))));
  EXPECT_THROW(Q.derive(2, Q.one()), Error);
}

TEST(BaseRing, PowerRule) {
  BaseRing R = qt();
  const BaseElem t = T(R);
  EXPECT_EQ(R.derive(0, R.mul(t, t)), R.mul(R.from_int(2), t));
}

TEST(BaseRing, QuotientRuleByClearingDenominators) {
  BaseRing R = qt();
  const BaseElem t = T(R);
  const BaseElem u = R.mul(t, t);
  const BaseElem v = R.add(t, R.one());
  const BaseElem d = R.derive(0, R.div(u, v));
  // d * v^2 must equal u' v - u v' = 2t(t+1) - t^2 = t^2 + 2t.
  const BaseElem cleared = R.mul(d, R.mul(v, v));
  EXPECT_EQ(cleared, R.add(R.mul(t, t), R.mul(R.from_int(2), t)));
  EXPECT_EQ(d, R.div(R.add(R.mul(t, t), R.mul(R.from_int(2), t)), R.mul(v, v)));
}

TEST(BaseRing, RejectsBadSpecs) {
  EXPECT_THROW(BaseRing({BaseKind::PrimeField, 4, 1}), Error);
  EXPECT_THROW(BaseRing({BaseKind::PrimeField, 1, 1}), Error);
  EXPECT_THROW(BaseRing({BaseKind::Rationals, 0, 0}), Error);
  EXPECT_THROW(BaseRing({BaseKind::Rationals, 3, 1}), Error);
  EXPECT_NO_THROW(BaseRing({BaseKind::PrimeField, 7919, 1}));
}

TEST(BaseRing, MixedKindsRejected) {
  BaseRing Q({BaseKind::Rationals, 0, 1});
  BaseRing R = qt();
  EXPECT_THROW(Q.add(Q.one(), T(R)), Error);
}

TEST(BaseRing, MultivariateGcdCancels) {
  BaseRing R = qt(2);
  const BaseElem s = T(R, 0), t = T(R, 1);
  const BaseElem common = R.add(R.mul(s, t), R.one());
  const BaseElem a = R.mul(common, R.sub(s, t));
  const BaseElem b = R.mul(common, R.add(s, R.from_int(2)));
  EXPECT_EQ(R.div(a, b), R.div(R.sub(s, t), R.add(s, R.from_int(2))));
}

class BaseRingProperties : public ::testing::TestWithParam<std::pair<std::uint64_t, std::uint32_t>> {};

TEST_P(BaseRingProperties, FieldAndDerivationLaws) {
  const auto [p, m] = GetParam();
  BaseRing R = qt(m, p);
  std::mt19937_64 rng(1234 + p * 10 + m);
  for (int trial = 0; trial < 40; ++trial) {
    const BaseElem a = random_coeff(rng, R, 4);
    const BaseElem b = random_coeff(rng, R, 4);
    if (!R.is_zero(a)) {
      EXPECT_TRUE(R.is_one(R.mul(a, R.inv(a))));
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      EXPECT_EQ(R.derive(i, R.add(a, b)), R.add(R.derive(i, a), R.derive(i, b)));
      EXPECT_EQ(R.derive(i, R.mul(a, b)), R.add(R.mul(R.derive(i, a), b), R.mul(a, R.derive(i, b))));
      for (std::uint32_t j = 0; j < m; ++j)
        EXPECT_EQ(R.derive(i, R.derive(j, a)), R.derive(j, R.derive(i, a)));
      if (p != 0) {
        EXPECT_TRUE(R.is_zero(R.derive(i, R.pow(a, p))));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, BaseRingProperties,
                         ::testing::Values(std::pair<std::uint64_t, std::uint32_t>{0, 1},
                                           std::pair<std::uint64_t, std::uint32_t>{0, 2},
                                           std::pair<std::uint64_t, std::uint32_t>{2, 1},
                                           std::pair<std::uint64_t, std::uint32_t>{3, 2},
                                           std::pair<std::uint64_t, std::uint32_t>{5, 1}));
