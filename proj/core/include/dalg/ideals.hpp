#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dalg/groebner.hpp"
#include "dalg/reduction.hpp"

namespace dalg {

/// All theta = delta^alpha with |alpha| <= k, in ascending order.
std::vector<DerivOp> derivation_operators(std::uint32_t m, std::uint32_t k);

/// {theta g : g in gens, |theta| <= k}, without duplicates or zeros.
std::vector<DiffPoly> prolong(const std::vector<DiffPoly>& gens, std::uint32_t k);

/// S(g) theta_f f - S(f) theta_g g, where theta_f u_f = theta_g u_g is the
/// least common derivative of the leaders. Empty when the leaders are
/// derivatives of different indeterminates. Throws ElementOfBaseRing.
std::optional<DiffPoly> delta_polynomial(const DiffPoly& f, const DiffPoly& g);

/// Greedy basic set: scanning F by increasing rank, keep each element reduced
/// with respect to those already kept. Elements of R are ignored.
AutoreducedSet basic_set(const std::vector<DiffPoly>& F);

struct CharsetOptions {
  std::size_t max_iterations = 200;
  /// Bound on the number of polynomials accumulated in the working set.
  std::size_t max_set_size = 400;
  /// Bound on the total number of terms in the working set.
  std::size_t max_terms = 20000;
  ReduceOptions reduce{false, 100000, 5000};
};

struct CharsetIteration {
  AutoRank rank;
  std::size_t set_size = 0;
  /// Nonzero remainders adjoined after this basic set was formed.
  std::size_t adjoined = 0;
};

struct CharsetResult {
  AutoreducedSet charset;
  std::vector<CharsetIteration> trace;
  /// A remainder was a nonzero element of R: the generated ideal,
  /// saturated by the initials and separants, is the unit ideal.
  bool nonzero_constant_remainder = false;
  std::optional<DiffPoly> constant_remainder;
  /// Per element g: S(g) has a nonzero remainder modulo the charset, the
  /// checkable stand-in for the condition S(g) not in the ideal.
  std::vector<bool> separant_remainder_nonzero;
};

/// Ritt-Wu iteration: G := basic_set(F), adjoin nonzero remainders of F \ G
/// (scaled by a unit), repeat until all remainders vanish. The auto-rank of G strictly decreases
/// whenever remainders are adjoined (checked; a violation throws). Throws
/// ZeroSeparantError and BudgetExceeded.
CharsetResult ritt_wu_charset(const std::vector<DiffPoly>& F, const CharsetOptions& opts = {});

enum class Verdict { Yes, NotFoundAtOrder };

const char* to_string(Verdict v);

struct SaturationQuery {
  DiffPoly target;
  /// Prolonged: theta g for |theta| <= k joins the ideal.
  std::vector<DiffPoly> generators;
  /// Joined as they are, without prolongation.
  std::vector<DiffPoly> algebraic_generators;
  DiffPoly H;
  std::uint32_t k = 0;
};

struct SaturationOptions {
  /// Largest power H^n tried when extracting the witness exponent.
  std::uint32_t n_max = 16;
  GroebnerOptions groebner;
};

struct SaturationResult {
  Verdict verdict = Verdict::NotFoundAtOrder;
  /// Least n <= n_max with H^n f in the truncated ideal, when found.
  std::optional<std::uint32_t> witness;
  std::uint32_t order = 0;
  std::size_t num_generators = 0;
  std::size_t num_variables = 0;
};

/// The truncated saturation ideal of a query, built once and probed for many
/// targets. The unsaturated ideal used for witness extraction is built on
/// first use.
class SaturationOracle {
 public:
  SaturationOracle(DiffRingPtr ring, const std::vector<DiffPoly>& generators,
                   const std::vector<DiffPoly>& algebraic_generators, const DiffPoly& H, std::uint32_t k,
                   const SaturationOptions& opts = {});

  SaturationResult member(const DiffPoly& f) const;
  /// Membership only, without witness extraction.
  bool contains(const DiffPoly& f) const { return f.is_zero() || saturated_.contains(f); }
  const AlgebraicIdeal& ideal() const { return saturated_; }

 private:
  std::optional<std::uint32_t> witness(const DiffPoly& f) const;

  DiffRingPtr ring_;
  std::vector<DiffPoly> gens_;
  DiffPoly H_;
  std::uint32_t k_;
  SaturationOptions opts_;
  AlgebraicIdeal saturated_;
  mutable std::optional<AlgebraicIdeal> plain_;
};

/// Decides f in (theta g, |theta| <= k; algebraic generators) : H^infinity in
/// the polynomial ring over the finitely many derivatives involved. Yes is
/// definitive for the differential saturation; NotFoundAtOrder is not.
SaturationResult saturation_member(const SaturationQuery& q, const SaturationOptions& opts = {});

/// Default prolongation order: highest derivative order among the polynomials plus 2.
std::uint32_t default_order(const std::vector<DiffPoly>& polys);

struct ProlongedAuxVerdict {
  std::size_t aux_index = 0;
  DerivOp theta;
  SaturationResult result;
};

struct PairVerdict {
  std::size_t first = 0;
  std::size_t second = 0;
  DiffPoly delta;
  /// Number of generators tau h in G_v.
  std::size_t restricted_generators = 0;
  SaturationResult result;
};

struct CoherenceReport {
  std::uint32_t order = 0;
  std::vector<bool> aux_partially_reduced;
  std::vector<ProlongedAuxVerdict> prolonged_aux;
  std::vector<PairVerdict> pairs;
  bool coherent = false;
};

/// Checks the three coherence conditions for G relative to the ideal
/// generated by `aux`: (1) exactly, (2) for |theta| <= k with G prolonged to
/// order k, (3) exactly in the restriction G_v (finite, since tau u_h must
/// rank below v) and by saturation membership. Throws ZeroSeparantError if
/// some S(g) vanishes.
CoherenceReport coherence_check(const AutoreducedSet& G, const std::vector<DiffPoly>& aux, std::uint32_t k,
                                const SaturationOptions& opts = {});

}  // namespace dalg
