#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dalg/diffpoly.hpp"

namespace dalg {

using Exponents = std::vector<std::uint32_t>;

/// Block order: blocks compared left to right (earlier blocks dominate, as in
/// an elimination order), graded reverse lexicographic inside each block.
/// Within a block, lower variable indices are larger.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder blocks(std::vector<std::size_t> block_sizes);

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::size_t>& block_sizes() const { return blocks_; }
  std::strong_ordering compare(const Exponents& a, const Exponents& b) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<std::size_t> blocks_;
};

/// Polynomial in finitely many algebraic variables over the base ring, terms
/// sorted by descending monomial order.
struct AlgPoly {
  std::vector<std::pair<Exponents, BaseElem>> terms;
  std::uint32_t sugar = 0;

  bool is_zero() const { return terms.empty(); }
  const Exponents& lm() const { return terms.front().first; }
};

struct GroebnerOptions {
  /// Budget on S-pair reductions; exceeding it throws BudgetExceeded.
  std::size_t max_pairs = 50000;
  /// Budget on monomial reduction steps.
  std::size_t max_steps = 20000000;
};

/// Polynomial ring R[x_0..x_{N-1}] with a fixed monomial order.
class AlgRing {
 public:
  AlgRing(const BaseRing& base, MonomialOrder order) : base_(&base), order_(std::move(order)) {}

  const BaseRing& base() const { return *base_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }

  AlgPoly from_terms(std::vector<std::pair<Exponents, BaseElem>> terms) const;
  AlgPoly add(const AlgPoly& a, const AlgPoly& b) const;
  AlgPoly sub(const AlgPoly& a, const AlgPoly& b) const;
  AlgPoly mul(const AlgPoly& a, const AlgPoly& b) const;
  AlgPoly monic(const AlgPoly& a) const;

  /// Reduced Groebner basis (monic, sorted by leading monomial).
  std::vector<AlgPoly> groebner_basis(std::vector<AlgPoly> gens, const GroebnerOptions& opts = {}) const;
  /// Full normal form modulo a Groebner basis.
  AlgPoly normal_form(const AlgPoly& f, const std::vector<AlgPoly>& basis,
                      std::size_t* steps = nullptr, std::size_t max_steps = SIZE_MAX) const;
  bool member(const AlgPoly& f, const std::vector<AlgPoly>& basis) const {
    return normal_form(f, basis).is_zero();
  }

 private:
  AlgPoly combine(std::vector<std::pair<Exponents, BaseElem>> terms) const;
  AlgPoly reduce(const AlgPoly& f, const std::vector<const AlgPoly*>& basis, std::size_t& steps,
                 std::size_t max_steps) const;
  AlgPoly sub_multiple(const AlgPoly& p, const Exponents& shift, const BaseElem& c,
                       const AlgPoly& g) const;

  const BaseRing* base_;
  MonomialOrder order_;
};

/// Ideal of R[W] for a finite set W of derivative variables, optionally
/// saturated by a polynomial H through an auxiliary variable z and the extra
/// generator 1 - z H. The order is a block order: [z] first, then the caller's
/// blocks, each grevlex with higher-ranked variables larger.
class AlgebraicIdeal {
 public:
  /// `blocks` partitions the variables by elimination priority; variables of
  /// the generators, `extra_vars` and `saturate_by` missing from every block
  /// are appended to the last block.
  AlgebraicIdeal(DiffRingPtr ring, const std::vector<DiffPoly>& gens,
                 std::vector<std::vector<DerivVar>> blocks,
                 std::optional<DiffPoly> saturate_by = std::nullopt,
                 const std::vector<DerivVar>& extra_vars = {}, const GroebnerOptions& opts = {});

  /// f in (gens) (: H^infinity when saturated). Variables outside the ideal's
  /// variable set are treated as free.
  bool contains(const DiffPoly& f) const;
  DiffPoly normal_form(const DiffPoly& f) const;
  /// Basis elements free of z.
  std::vector<DiffPoly> basis() const;
  /// Basis elements whose variables all lie in `keep` (an elimination ideal
  /// when `keep` is a union of trailing blocks).
  std::vector<DiffPoly> eliminate_to(const std::set<DerivVar>& keep) const;
  bool is_unit() const;
  std::size_t num_variables() const { return vars_.size(); }

 private:
  AlgPoly to_alg(const DiffPoly& f) const;
  DiffPoly from_alg(const AlgPoly& p) const;
  // Splits f by the monomial in variables foreign to this ideal.
  std::map<Monomial, DiffPoly> split_foreign(const DiffPoly& f) const;

  DiffRingPtr ring_;
  std::map<DerivVar, std::size_t> index_;
  bool saturated_ = false;
  std::vector<DerivVar> vars_;  // position i maps to algebraic variable offset + i
  std::vector<std::size_t> block_sizes_;
  AlgRing alg_;
  std::vector<AlgPoly> basis_;
};

}  // namespace dalg
