#include <gtest/gtest.h>

#include <random>

#include "dalg/error.hpp"
#include "dalg/ideals.hpp"
#include "support.hpp"

using namespace dalg;
using namespace dalg::testing;

namespace {

bool same_set(const AutoreducedSet& G, std::vector<DiffPoly> expect) {
  if (G.size() != expect.size()) return false;
  for (const auto& e : expect)
    if (std::find(G.begin(), G.end(), e) == G.end()) return false;
  return true;
}

}  // namespace

TEST(Delta, TwoDerivations) {
  auto r = ring_q(2, 1);
  const auto d = delta_polynomial(P(r, "d0 y0 - y0"), P(r, "d1 y0 - y0"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, P(r, "d0 y0 - d1 y0"));
}

TEST(Delta, DifferentIndeterminates) {
  auto r = ring_q(1, 2);
  EXPECT_FALSE(delta_polynomial(P(r, "d0 y0"), P(r, "d0 y1")).has_value());
}

TEST(Delta, SelfIsZero) {
  auto r = ring_q();
  const DiffPoly f = P(r, "y'^2 - 4*y");
  EXPECT_TRUE(delta_polynomial(f, f)->is_zero());
  EXPECT_THROW(delta_polynomial(P(r, "3"), f), Error);
}

TEST(Delta, Antisymmetry) {
  std::mt19937_64 rng(41);
  auto r = ring_q(2, 2);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const DiffPoly f = random_poly(rng, r, {2, 2, 3, 4}), g = random_poly(rng, r, {2, 2, 3, 4});
    if (f.is_constant() || g.is_constant()) continue;
    const auto a = delta_polynomial(f, g), b = delta_polynomial(g, f);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(*a, -*b);
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(BasicSet, Examples) {
  auto q = ring_q();
  EXPECT_TRUE(same_set(basic_set({P(q, "y' - 1"), P(q, "y'^2")}), {P(q, "y' - 1")}));
  EXPECT_TRUE(same_set(basic_set({P(q, "y")}), {P(q, "y")}));
  auto q2 = ring_q(1, 2);
  EXPECT_TRUE(same_set(basic_set({P(q2, "d0 y0^2 - y0"), P(q2, "d0^2 y1")}), {P(q2, "d0 y0^2 - y0"), P(q2, "d0^2 y1")}));
  EXPECT_TRUE(basic_set({}).empty());
  EXPECT_TRUE(basic_set({P(q, "5")}).empty());
}

// Oracle: exhaustive search over all subsets for the autoreduced subset of
// least auto-rank.
TEST(BasicSet, MinimalAgainstExhaustiveSearch) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    auto r = trial % 2 ? ring_q(1, 2) : ring_fp(3, 2, 1);
    std::vector<DiffPoly> F;
    const std::size_t size = 2 + rng() % 5;
    for (std::size_t i = 0; i < size; ++i) F.push_back(random_poly(rng, r, {2, 2, 2, 3}));
    const AutoreducedSet greedy = basic_set(F);
    std::optional<AutoRank> best;
    for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
      std::vector<DiffPoly> sub;
      for (std::size_t i = 0; i < size; ++i)
        if (mask >> i & 1) sub.push_back(F[i]);
      if (!is_autoreduced(sub)) continue;
      const AutoRank rk = AutoreducedSet(sub).rank();
      if (!best || rk < *best) best = rk;
    }
    ASSERT_TRUE(best.has_value());
    EXPECT_TRUE(greedy.rank() == *best);
  }
}

TEST(Charset, Examples) {
  auto q = ring_q();
  auto a = ritt_wu_charset({P(q, "y'^2 - 4*y")});
  EXPECT_TRUE(same_set(a.charset, {P(q, "y'^2 - 4*y")}));
  EXPECT_FALSE(a.nonzero_constant_remainder);
  ASSERT_EQ(a.separant_remainder_nonzero.size(), 1u);
  EXPECT_TRUE(a.separant_remainder_nonzero[0]);
  auto b = ritt_wu_charset({P(q, "y'^2 - 4*y"), P(q, "y'' - 2")});
  EXPECT_TRUE(same_set(b.charset, {P(q, "y'^2 - 4*y")}));
  auto c = ritt_wu_charset({P(q, "y'"), P(q, "y")});
  EXPECT_TRUE(same_set(c.charset, {P(q, "y")}));
  auto e = ritt_wu_charset({});
  EXPECT_TRUE(e.charset.empty());
}

TEST(Charset, UnitIdealSignalled) {
  auto q = ring_q();
  auto res = ritt_wu_charset({P(q, "y - 1"), P(q, "y - 2")});
  EXPECT_TRUE(res.nonzero_constant_remainder);
  ASSERT_TRUE(res.constant_remainder.has_value());
  EXPECT_TRUE(res.constant_remainder->is_constant());
}

TEST(Charset, ZeroSeparantPropagates) {
  auto f3 = ring_fp(3);
  try {
    ritt_wu_charset({P(f3, "y'^3 - y"), P(f3, "y'' + y")});
    FAIL();
  } catch (const ZeroSeparantError& e) {
    EXPECT_NE(std::string(e.what()).find("y'^3"), std::string::npos);
  }
}

TEST(Charset, RandomSuiteContract) {
  std::mt19937_64 rng(47);
  int done = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t m = 1 + rng() % 2, n = 1 + rng() % 2;
    auto r = trial % 3 == 0 ? ring_fp(5, m, n) : ring_q(m, n);
    std::vector<DiffPoly> F;
    for (std::size_t i = 0, s = 1 + rng() % 4; i < s; ++i) F.push_back(random_poly(rng, r, {2, 2, 3, 3}));
    CharsetResult res;
    try {
      res = ritt_wu_charset(F);
    } catch (const ZeroSeparantError&) {
      continue;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::BudgetExceeded);
      continue;
    }
    ++done;
    for (std::size_t s = 1; s < res.trace.size(); ++s) EXPECT_TRUE(res.trace[s].rank < res.trace[s - 1].rank);
    if (res.nonzero_constant_remainder) continue;
    for (const auto& f : F) EXPECT_TRUE(ritt_reduce(f, res.charset).remainder.is_zero());
  }
  EXPECT_GT(done, 40);
}

TEST(Groebner, Examples) {
  auto q = ring_q();
  AlgebraicIdeal I(q, {P(q, "y^2 - 1"), P(q, "y - 1")}, {});
  const auto basis = I.basis();
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], P(q, "y - 1"));
  AlgebraicIdeal Z(q, {DiffPoly(q)}, {});
  EXPECT_TRUE(Z.basis().empty());
  EXPECT_TRUE(Z.contains(DiffPoly(q)));
  EXPECT_FALSE(Z.contains(P(q, "y")));
  auto f2 = ring_fp(2);
  AlgebraicIdeal F(f2, {P(f2, "y^2 + y")}, {});
  EXPECT_TRUE(F.contains(P(f2, "y^4 + y")));
  EXPECT_FALSE(F.contains(P(f2, "y^3")));
}

TEST(Groebner, ExplicitCombinationsAreMembers) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = trial % 2 ? ring_fp(7, 1, 2) : ring_q(1, 2);
    std::vector<DiffPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, r, {1, 2, 3, 3}));
    DiffPoly combo(r);
    for (const auto& g : gens) combo += random_poly(rng, r, {1, 2, 3, 3}) * g;
    AlgebraicIdeal I(r, gens, {});
    EXPECT_TRUE(I.contains(combo));
    // Reduced basis elements must themselves be members and normal forms idempotent.
    for (const auto& b : I.basis()) EXPECT_TRUE(I.contains(b));
    const DiffPoly nf = I.normal_form(random_poly(rng, r, {1, 2, 3, 3}));
    EXPECT_EQ(I.normal_form(nf), nf);
  }
}

TEST(Groebner, EliminationOrder) {
  auto q = ring_q(1, 2);
  // y0 - y1^2, y0 - y1^3 eliminate y0: y1^2 - y1^3 in Q[y1].
  AlgebraicIdeal I(q, {P(q, "y0 - y1^2"), P(q, "y0 - y1^3")}, {{DerivVar{0, DerivOp()}}, {DerivVar{1, DerivOp()}}});
  const auto elim = I.eliminate_to({DerivVar{1, DerivOp()}});
  ASSERT_EQ(elim.size(), 1u);
  EXPECT_EQ(elim[0], P(q, "y1^3 - y1^2"));
}

TEST(Groebner, BudgetExceeded) {
  auto q = ring_q(1, 3);
  GroebnerOptions tiny{1, 10};
  try {
    AlgebraicIdeal I(q, {P(q, "y0*y1 - y2^2"), P(q, "y0*y2 - y1^2"), P(q, "y1*y2 - y0^2 + 1")}, {}, std::nullopt, {},
                     tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Saturation, Examples) {
  auto q = ring_q();
  auto a = saturation_member({P(q, "y'' - 2"), {P(q, "y'^2 - 4*y")}, {}, P(q, "2*y'"), 1});
  EXPECT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.witness, std::optional<std::uint32_t>(1));
  auto b = saturation_member({P(q, "1"), {P(q, "y")}, {}, P(q, "1"), 3});
  EXPECT_EQ(b.verdict, Verdict::NotFoundAtOrder);
  EXPECT_EQ(b.order, 3u);
  auto c = saturation_member({DiffPoly(q), {P(q, "y")}, {}, P(q, "1"), 0});
  EXPECT_EQ(c.verdict, Verdict::Yes);
  EXPECT_EQ(c.witness, std::optional<std::uint32_t>(0));
  // Not found at order 0: the derivative is needed.
  auto d = saturation_member({P(q, "y'' - 2"), {P(q, "y'^2 - 4*y")}, {}, P(q, "2*y'"), 0});
  EXPECT_EQ(d.verdict, Verdict::NotFoundAtOrder);
}

TEST(Saturation, SaturationNeedsPowers) {
  auto q = ring_q(1, 2);
  // y0^2 * y1 in (y0^3 y1^2 ... ): f = y1, ideal (y0^2 y1), H = y0 => y0^2 * y1 in ideal, witness 2.
  auto r = saturation_member({P(q, "y1"), {}, {P(q, "y0^2*y1")}, P(q, "y0"), 0});
  EXPECT_EQ(r.verdict, Verdict::Yes);
  EXPECT_EQ(r.witness, std::optional<std::uint32_t>(2));
  auto no = saturation_member({P(q, "y1"), {}, {P(q, "y0^2*y1")}, P(q, "y1 + 1"), 0});
  EXPECT_EQ(no.verdict, Verdict::NotFoundAtOrder);
}

TEST(Saturation, AgreesWithZeroRemainders) {
  std::mt19937_64 rng(59);
  int agreed = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto r = trial % 2 ? ring_fp(5) : ring_q();
    const DiffPoly g = random_poly(rng, r, {1, 2, 3, 3});
    if (g.is_constant() || separant(g).is_zero()) continue;
    AutoreducedSet G({g});
    const DiffPoly f = random_poly(rng, r, {1, 1, 2, 3}) * g + random_poly(rng, r, {0, 1, 2, 3}) * g.derive(0);
    const auto cert = ritt_reduce(f, G);
    if (!cert.remainder.is_zero()) continue;
    const auto res = saturation_member({f, {g}, {}, H_of(G, r), cert.max_prolongation_order()});
    EXPECT_EQ(res.verdict, Verdict::Yes);
    ++agreed;
  }
  EXPECT_GT(agreed, 5);
}

TEST(Coherence, Examples) {
  auto q = ring_q();
  auto a = coherence_check(AutoreducedSet({P(q, "y'^2 - 4*y")}), {}, 2);
  EXPECT_TRUE(a.coherent);
  EXPECT_EQ(a.order, 2u);
  EXPECT_TRUE(a.pairs.empty());

  auto r = ring_q(2, 1);
  auto b = coherence_check(AutoreducedSet({P(r, "d0 y0 - y0"), P(r, "d1 y0 - y0")}), {}, 1);
  ASSERT_EQ(b.pairs.size(), 1u);
  EXPECT_EQ(b.pairs[0].delta, P(r, "d0 y0 - d1 y0"));
  EXPECT_EQ(b.pairs[0].result.verdict, Verdict::Yes);
  EXPECT_TRUE(b.coherent);

  auto c = coherence_check(AutoreducedSet({P(q, "y'^2 - 4*y")}), {P(q, "y'' - y")}, 1);
  ASSERT_EQ(c.aux_partially_reduced.size(), 1u);
  EXPECT_FALSE(c.aux_partially_reduced[0]);
  EXPECT_FALSE(c.coherent);
}

TEST(Coherence, CoherentPairWithLowerGenerator) {
  // Delta = -d1 y, which is itself in G_v.
  auto r = ring_q(2, 1);
  auto rep = coherence_check(AutoreducedSet({P(r, "d0 y0 - y0"), P(r, "d1 y0")}), {}, 1);
  ASSERT_EQ(rep.pairs.size(), 1u);
  EXPECT_EQ(rep.pairs[0].delta, P(r, "-d1 y0"));
  EXPECT_TRUE(rep.coherent);
}

TEST(Coherence, IncoherentPairDetected) {
  // d0 y = y^2 and d1 y = 1: Delta = -2 y d1 y, congruent to -2 y, while
  // G_v = {f, g, d0 f} vanishes at y = d0 y = d1 y = 1, d0^2 y = 2.
  auto r = ring_q(2, 1);
  auto rep = coherence_check(AutoreducedSet({P(r, "d0 y0 - y0^2"), P(r, "d1 y0 - 1")}), {}, 1);
  ASSERT_EQ(rep.pairs.size(), 1u);
  EXPECT_EQ(rep.pairs[0].restricted_generators, 3u);
  EXPECT_EQ(rep.pairs[0].result.verdict, Verdict::NotFoundAtOrder);
  EXPECT_FALSE(rep.coherent);
}

TEST(Coherence, ZeroSeparantRejected) {
  auto f3 = ring_fp(3);
  EXPECT_THROW(coherence_check(AutoreducedSet({P(f3, "y'^3 - y")}), {}, 1), ZeroSeparantError);
}

TEST(Prolong, CountsOperators) {
  EXPECT_EQ(derivation_operators(2, 2).size(), 6u);
  EXPECT_EQ(derivation_operators(1, 4).size(), 5u);
  auto q = ring_q();
  EXPECT_EQ(prolong({P(q, "y")}, 2).size(), 3u);
}
