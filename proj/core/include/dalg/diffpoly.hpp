#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "dalg/base_ring.hpp"

namespace dalg {

/// A derivation operator delta^alpha, alpha in N^m. Entries past m are zero.
class DerivOp {
 public:
  DerivOp() { alpha_.fill(0); }
  static DerivOp single(std::uint32_t i, std::uint32_t times = 1);
  static DerivOp from_exponents(const std::vector<std::uint32_t>& alpha);

  std::uint32_t operator[](std::size_t i) const { return alpha_[i]; }
  std::uint32_t order() const { return order_; }
  bool is_identity() const { return order_ == 0; }
  std::vector<std::uint32_t> exponents(std::uint32_t m) const;

  /// Composition delta^a delta^b = delta^(a+b).
  DerivOp operator+(const DerivOp& o) const;
  /// Componentwise a <= b, i.e. delta^b = delta^(b-a) delta^a.
  bool divides(const DerivOp& o) const;
  /// b - a, requires a.divides(b).
  DerivOp quotient_of(const DerivOp& o) const;
  DerivOp lcm(const DerivOp& o) const;

  bool operator==(const DerivOp& o) const { return alpha_ == o.alpha_; }
  /// Graded, then reverse-lexicographic on (alpha_{m-1}, ..., alpha_0).
  std::strong_ordering operator<=>(const DerivOp& o) const;

 private:
  std::array<std::uint16_t, kMaxDerivations> alpha_;
  std::uint32_t order_ = 0;
};

/// A derivative theta Y_i of a differential indeterminate.
///
/// The comparison operators implement the ranking: (|alpha|, i,
/// alpha_{m-1}, ..., alpha_0) lexicographically. The tuple determines (i,
/// alpha), so distinct variables never tie.
struct DerivVar {
  std::uint32_t var = 0;
  DerivOp op;

  std::uint32_t order() const { return op.order(); }
  DerivVar derived(const DerivOp& theta) const { return {var, op + theta}; }

  bool operator==(const DerivVar& o) const = default;
  std::strong_ordering operator<=>(const DerivVar& o) const;
};

/// v is a proper derivative of w: same indeterminate, alpha_v >= alpha_w, v != w.
bool is_proper_derivative(const DerivVar& v, const DerivVar& w);
/// v is a derivative of w (possibly equal).
bool is_derivative(const DerivVar& v, const DerivVar& w);

/// Power product of derivative variables, sorted by descending rank.
class Monomial {
 public:
  using Factor = std::pair<DerivVar, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const DerivVar& v, std::uint32_t e = 1);
  /// Factors in any order; duplicates are merged, zero exponents dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree_in(const DerivVar& v) const;
  std::uint32_t total_degree() const;
  /// Same monomial with v removed.
  Monomial without(const DerivVar& v) const;

  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const = default;
  /// Lexicographic, with variables compared by rank (highest first).
  std::strong_ordering operator<=>(const Monomial& o) const;

 private:
  std::vector<Factor> factors_;
};

/// Ring context R{Y_0..Y_{n-1}}: a base ring plus the number of indeterminates.
class DiffRing {
 public:
  DiffRing(RingSpec spec, std::uint32_t n);

  const BaseRing& base() const { return base_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return base_.num_derivations(); }

  bool operator==(const DiffRing& o) const { return base_ == o.base_ && n_ == o.n_; }

 private:
  BaseRing base_;
  std::uint32_t n_;
};

using DiffRingPtr = std::shared_ptr<const DiffRing>;

DiffRingPtr make_ring(RingSpec spec, std::uint32_t n);

struct Term {
  Monomial mono;
  BaseElem coeff;
};

/// Sparse differential polynomial in R{Y}. Terms are sorted by descending
/// monomial order and carry nonzero coefficients; zero has no terms.
class DiffPoly {
 public:
  DiffPoly() = default;
  explicit DiffPoly(DiffRingPtr ring) : ring_(std::move(ring)) {}

  static DiffPoly constant(DiffRingPtr ring, const BaseElem& c);
  static DiffPoly integer(DiffRingPtr ring, long long c);
  static DiffPoly variable(DiffRingPtr ring, const DerivVar& v, std::uint32_t e = 1);
  /// Terms in any order; like monomials are combined.
  static DiffPoly from_terms(DiffRingPtr ring, std::vector<Term> terms);

  const DiffRingPtr& ring_ptr() const { return ring_; }
  const DiffRing& ring() const { return *ring_; }
  const BaseRing& base() const { return ring_->base(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// f lies in R (no derivative variable appears).
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  /// The value of a constant polynomial.
  BaseElem constant_value() const;

  std::uint32_t degree_in(const DerivVar& v) const;
  bool appears(const DerivVar& v) const { return degree_in(v) > 0; }
  /// Appearing variables in ascending rank order.
  std::vector<DerivVar> variables() const;
  std::uint32_t max_order() const;
  std::size_t total_degree() const;

  /// Coefficient of v^k when f is viewed as a polynomial in v.
  DiffPoly coefficient(const DerivVar& v, std::uint32_t k) const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  DiffPoly scaled(const BaseElem& c) const;
  DiffPoly times_monomial(const Monomial& m, const BaseElem& c) const;
  DiffPoly pow(std::uint32_t e) const;

  /// delta_i f, extending delta_i from R by delta_i(theta y_j) = (delta_i theta) y_j.
  DiffPoly derive(std::uint32_t i) const;
  DiffPoly derive(const DerivOp& theta) const;

  /// Image under the R-algebra endomorphism v -> sigma(v); unmapped variables stay.
  DiffPoly substitute(const std::map<DerivVar, DiffPoly>& sigma) const;

  /// Structural equality (the representation is canonical).
  bool operator==(const DiffPoly& o) const;
  /// Deterministic total order on polynomials of one ring.
  std::strong_ordering compare(const DiffPoly& o) const;

 private:
  void check_same_ring(const DiffPoly& o) const;
  static std::vector<Term> combine(const BaseRing& R, std::vector<Term> terms);

  DiffRingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace dalg
