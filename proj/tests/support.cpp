#include "support.hpp"

namespace dalg::testing {

DiffRingPtr ring_q(std::uint32_t m, std::uint32_t n) { return make_ring({BaseKind::Rationals, 0, m}, n); }

DiffRingPtr ring_fp(std::uint64_t p, std::uint32_t m, std::uint32_t n) {
  return make_ring({BaseKind::PrimeField, p, m}, n);
}

DiffRingPtr ring_qt(std::uint32_t m, std::uint32_t n, std::uint64_t p) {
  return make_ring({BaseKind::RationalFunctions, p, m}, n);
}

BaseElem random_coeff(std::mt19937_64& rng, const BaseRing& R, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  auto nonzero = [&] {
    int v = 0;
    while (v == 0) v = d(rng);
    return v;
  };
  if (!R.has_parameters()) {
    if (R.characteristic() == 0 && rng() % 4 == 0) return R.from_rational(mpq_class(nonzero(), std::abs(nonzero())));
    return R.from_int(nonzero());
  }
  const std::uint32_t m = R.num_derivations();
  auto small_poly = [&] {
    BaseElem acc = R.from_int(d(rng));
    for (std::uint32_t i = 0; i < m; ++i)
      if (rng() % 2) acc = R.add(acc, R.mul(R.from_int(nonzero()), R.pow(R.parameter(i), 1 + rng() % 2)));
    return acc;
  };
  BaseElem num = small_poly();
  if (R.is_zero(num)) num = R.one();
  if (rng() % 3 != 0) return num;
  BaseElem den = small_poly();
  if (R.is_zero(den)) return num;
  return R.div(num, den);
}

DerivVar random_var(std::mt19937_64& rng, const DiffRing& ring, std::uint32_t max_order) {
  const std::uint32_t order = static_cast<std::uint32_t>(rng() % (max_order + 1));
  std::vector<std::uint32_t> alpha(ring.m(), 0);
  for (std::uint32_t k = 0; k < order; ++k) ++alpha[rng() % ring.m()];
  return DerivVar{static_cast<std::uint32_t>(rng() % ring.n()), DerivOp::from_exponents(alpha)};
}

DiffPoly random_poly(std::mt19937_64& rng, const DiffRingPtr& ring, const RandomPolyShape& shape) {
  const BaseRing& R = ring->base();
  const std::size_t nterms = 1 + rng() % shape.max_terms;
  std::vector<Term> terms;
  for (std::size_t t = 0; t < nterms; ++t) {
    const std::uint32_t deg = static_cast<std::uint32_t>(rng() % (shape.max_degree + 1));
    std::vector<Monomial::Factor> fs;
    for (std::uint32_t k = 0; k < deg; ++k) fs.emplace_back(random_var(rng, *ring, shape.max_order), 1);
    terms.push_back({Monomial::from_factors(std::move(fs)), random_coeff(rng, R, shape.coeff_bound)});
  }
  return DiffPoly::from_terms(ring, std::move(terms));
}

}  // namespace dalg::testing
