#include <gtest/gtest.h>

#include <random>

#include "dalg/error.hpp"
#include "dalg/reduction.hpp"
#include "support.hpp"

using namespace dalg;
using namespace dalg::testing;

namespace {

DerivOp delta(std::uint32_t times = 1) { return DerivOp::single(0, times); }

}  // namespace

TEST(Reduction, PartialProlongationExample) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - y")});
  const auto cert = partial_reduce(P(q, "y''"), G);
  EXPECT_EQ(cert.remainder, P(q, "y'"));
  EXPECT_EQ(cert.h_exponents, (HExponents{{0, 1}}));
  ASSERT_EQ(cert.multipliers.size(), 1u);
  EXPECT_EQ(cert.multipliers.at({delta(), 0}), P(q, "1"));
  EXPECT_TRUE(verify_certificate(P(q, "y''"), G, cert));
}

TEST(Reduction, PartialIdentityCase) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - y")});
  const auto cert = partial_reduce(P(q, "y"), G);
  EXPECT_EQ(cert.remainder, P(q, "y"));
  EXPECT_EQ(cert.h_exponents, (HExponents{{0, 0}}));
  EXPECT_TRUE(cert.multipliers.empty());
}

TEST(Reduction, ZeroSeparantInCharacteristicThree) {
  auto f3 = ring_fp(3);
  AutoreducedSet G({P(f3, "y'^3 - y")});
  EXPECT_TRUE(G.separant(0).is_zero());
  try {
    partial_reduce(P(f3, "y''"), G);
    FAIL() << "expected ZeroSeparant";
  } catch (const ZeroSeparantError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSeparant);
    EXPECT_EQ(e.element(), 0u);
  }
}

TEST(Reduction, LeaderDegreeStep) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - y")});
  const auto cert = ritt_reduce(P(q, "y'^3"), G);
  EXPECT_EQ(cert.remainder, P(q, "y*y'"));
  EXPECT_EQ(cert.h_exponents, (HExponents{{0, 0}}));
  EXPECT_EQ(cert.multipliers.at({DerivOp(), 0}), P(q, "y'"));
  EXPECT_TRUE(verify_certificate(P(q, "y'^3"), G, cert));
}

TEST(Reduction, ConstantIsAlreadyReduced) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - y")});
  const auto cert = ritt_reduce(P(q, "5"), G);
  EXPECT_EQ(cert.remainder, P(q, "5"));
  EXPECT_EQ(cert.h_exponents, (HExponents{{0, 0}}));
}

TEST(Reduction, FullChainsPartialStage) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - y")});
  const auto cert = ritt_reduce(P(q, "y''"), G);
  EXPECT_EQ(cert.remainder, P(q, "y'"));
  EXPECT_EQ(h_element(G, cert.h_exponents, q), P(q, "2*y'"));
  EXPECT_TRUE(is_reduced(cert.remainder, G.elements()));
}

TEST(Reduction, RittExampleRemainder) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - 4*y")});
  const auto cert = ritt_reduce(P(q, "y''"), G);
  EXPECT_EQ(cert.remainder, P(q, "4*y'"));
  EXPECT_EQ(cert.h_exponents, (HExponents{{0, 1}}));
}

TEST(Reduction, HandBuiltCertificate) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - y")});
  ReductionCertificate cert;
  cert.kind = ReductionKind::Full;
  cert.h_exponents = {{0, 1}};
  cert.multipliers.emplace(ReductionCertificate::Key{delta(), 0}, P(q, "1"));
  cert.remainder = P(q, "y'");
  EXPECT_TRUE(verify_certificate(P(q, "y''"), G, cert));
  cert.remainder = P(q, "y' + 1");
  EXPECT_FALSE(verify_certificate(P(q, "y''"), G, cert));
}

TEST(Reduction, TamperedCertificatesFail) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y'^2 - 4*y")});
  const DiffPoly f = P(q, "y''^2 + y'");
  auto cert = ritt_reduce(f, G);
  ASSERT_TRUE(verify_certificate(f, G, cert));
  auto bad = cert;
  bad.remainder += P(q, "1");
  EXPECT_FALSE(verify_certificate(f, G, bad));
  bad = cert;
  bad.h_exponents[0].second += 1;
  EXPECT_FALSE(verify_certificate(f, G, bad));
  bad = cert;
  bad.multipliers.begin()->second += P(q, "y");
  EXPECT_FALSE(verify_certificate(f, G, bad));
}

TEST(Reduction, ElementsReduceToZero) {
  auto q = ring_q(2, 2);
  AutoreducedSet G({P(q, "d0 y0^2 - y1"), P(q, "d1 y1 - y0*y1")});
  for (const auto& g : G) EXPECT_TRUE(ritt_reduce(g, G).remainder.is_zero());
}

TEST(Reduction, NoCertificatePathMatches) {
  auto q = ring_q();
  AutoreducedSet G({P(q, "y*y'' + y'^2 - 1")});
  const DiffPoly f = P(q, "y'''^2*y + y''");
  const auto a = ritt_reduce(f, G);
  const auto b = ritt_reduce(f, G, ReduceOptions{false, 100000});
  EXPECT_EQ(a.remainder, b.remainder);
  EXPECT_EQ(a.h_exponents, b.h_exponents);
  EXPECT_TRUE(b.multipliers.empty());
}

namespace {

// Random autoreduced set built by greedy selection from random candidates,
// discarding candidates whose separant vanishes.
AutoreducedSet random_set(std::mt19937_64& rng, const DiffRingPtr& ring, std::size_t max_size) {
  std::vector<DiffPoly> chosen;
  for (int attempt = 0; attempt < 20 && chosen.size() < max_size; ++attempt) {
    DiffPoly g = random_poly(rng, ring, {2, 2, 3, 4});
    if (g.is_constant() || separant(g).is_zero()) continue;
    std::vector<DiffPoly> trial = chosen;
    trial.push_back(g);
    if (is_autoreduced(trial)) chosen = std::move(trial);
  }
  return AutoreducedSet(chosen);
}

}  // namespace

class ReductionSoundness : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ReductionSoundness, CertificatesVerify) {
  const std::uint64_t p = GetParam();
  std::mt19937_64 rng(1000 + p);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t m = 1 + rng() % 2, n = 1 + rng() % 2;
    auto ring = p == 0 ? ring_q(m, n) : ring_fp(p, m, n);
    const AutoreducedSet G = random_set(rng, ring, 3);
    const DiffPoly f = random_poly(rng, ring, {3, 3, 4, 5});
    const auto full = ritt_reduce(f, G);
    EXPECT_TRUE(verify_certificate(f, G, full));
    EXPECT_TRUE(is_reduced(full.remainder, G.elements()));
    for (std::size_t s = 1; s < full.trace.size(); ++s) EXPECT_LT(full.trace[s], full.trace[s - 1]);
    if (!f.is_constant() && !full.remainder.is_constant()) {
      EXPECT_LE(rank_of_poly(full.remainder), rank_of_poly(f));
    }
    const auto again = ritt_reduce(full.remainder, G);
    EXPECT_EQ(again.remainder, full.remainder);
    for (const auto& [ni, mi] : again.h_exponents) EXPECT_EQ(ni + mi, 0u);
    const auto part = partial_reduce(f, G);
    EXPECT_TRUE(verify_certificate(f, G, part));
    for (const auto& [ni, mi] : part.h_exponents) EXPECT_EQ(ni, 0u);
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

INSTANTIATE_TEST_SUITE_P(Characteristics, ReductionSoundness, ::testing::Values(0, 2, 3, 5));

TEST(Reduction, RationalFunctionCoefficients) {
  auto r = ring_qt(1, 1);
  AutoreducedSet G({P(r, "t*y'^2 - y")});
  const DiffPoly f = P(r, "y''' + 1/(t + 1)*y''");
  const auto cert = ritt_reduce(f, G);
  EXPECT_TRUE(verify_certificate(f, G, cert));
}
