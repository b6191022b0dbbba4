#pragma once

#include <random>
#include <string>
#include <vector>

#include "dalg/diffpoly.hpp"
#include "dalg/text.hpp"

namespace dalg::testing {

DiffRingPtr ring_q(std::uint32_t m = 1, std::uint32_t n = 1);
DiffRingPtr ring_fp(std::uint64_t p, std::uint32_t m = 1, std::uint32_t n = 1);
DiffRingPtr ring_qt(std::uint32_t m = 1, std::uint32_t n = 1, std::uint64_t p = 0);

inline DiffPoly P(const DiffRingPtr& ring, const std::string& text) { return parse_poly(text, ring); }

struct RandomPolyShape {
  std::uint32_t max_order = 2;
  std::uint32_t max_degree = 2;
  std::size_t max_terms = 4;
  int coeff_bound = 5;
};

/// Random base-ring element; for rational-function rings a small quotient of
/// polynomials in the parameters.
BaseElem random_coeff(std::mt19937_64& rng, const BaseRing& R, int bound);
DerivVar random_var(std::mt19937_64& rng, const DiffRing& ring, std::uint32_t max_order);
DiffPoly random_poly(std::mt19937_64& rng, const DiffRingPtr& ring, const RandomPolyShape& shape);

}  // namespace dalg::testing
