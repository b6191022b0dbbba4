#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dalg/ideals.hpp"

namespace dalg {

/// The data (G, h, V, V_B, B, P) of the structure theorem for the ideal
/// generated by the input. V and V \ V_B are infinite and are given by a
/// predicate and an order-bounded enumerator.
struct StructureDecomposition {
  DiffRingPtr ring;
  AutoreducedSet G;
  DiffPoly H_poly;
  /// Ascending.
  std::vector<DerivVar> Yprime;
  /// Ascending.
  std::vector<DerivVar> V_B;
  /// Generators of the truncated elimination ideal p cap R[Y'].
  std::vector<DiffPoly> p1_gens;
  std::uint32_t order = 0;

  /// v is not a proper derivative of any leader of G.
  bool in_V(const DerivVar& v) const;
  bool in_V_B(const DerivVar& v) const;
  /// {v in V \ V_B : |alpha_v| <= order_bound}, ascending.
  std::vector<DerivVar> P_vars(std::uint32_t order_bound) const;
};

struct StructureOptions {
  CharsetOptions charset;
  SaturationOptions saturation;
};

/// G = ritt_wu_charset(gens), H = H(G), Y' = the partially reduced
/// derivatives of gens and G closed under taking lower derivatives, plus
/// `extras`; p1_gens by elimination in the prolonged ideal saturated by H.
/// Throws UnitIdeal, ZeroSeparantInCharset, ExtrasNotPartiallyReduced.
StructureDecomposition decompose(const DiffRingPtr& ring, const std::vector<DiffPoly>& gens,
                                 const std::vector<DerivVar>& extras, std::uint32_t k,
                                 const StructureOptions& opts = {});

struct Localization {
  /// Reduced with respect to G, hence in R[V].
  DiffPoly numerator;
  HExponents h_exponents;
  ReductionCertificate certificate;
};

/// f = numerator / H with H read from h_exponents, modulo [G].
Localization express_in_localization(const DiffPoly& f, const StructureDecomposition& d);

/// sum b_i p_i with b_i in R[V_B] and p_i in R[V \ V_B], p_1 nonzero.
struct DependenceInstance {
  std::vector<DiffPoly> b;
  std::vector<DiffPoly> p;
};

enum class ClaimStatus { Pass, Fail, Vacuous, Inconclusive };

const char* to_string(ClaimStatus s);

struct ClaimCheck {
  std::string subject;
  bool passed = true;
  std::string evidence;
};

struct ClaimVerdict {
  int claim = 0;
  std::string statement;
  ClaimStatus status = ClaimStatus::Pass;
  std::vector<ClaimCheck> checks;
  /// Present exactly when status is Fail.
  std::optional<std::string> counterexample;
};

struct DependenceVerdict {
  DependenceInstance instance;
  /// Values of the specialization psi on the P-variables of the instance.
  std::map<DerivVar, BaseElem> point;
  bool point_found = false;
  /// psi(p_i); an R-linear dependence of the b_i when membership is Yes.
  std::vector<BaseElem> r;
  DiffPoly specialized;
  std::optional<SaturationResult> membership;
};

struct KernelProbe {
  std::size_t b_monomials = 0;
  std::size_t p_monomials = 0;
  std::size_t rank_b = 0;
  std::size_t rank_products = 0;
  std::size_t kernel_dim = 0;
  std::size_t predicted_kernel_dim = 0;
  bool agrees = false;
};

struct VerificationReport {
  std::uint32_t order = 0;
  std::vector<ClaimVerdict> claims;
  std::vector<DependenceVerdict> dependences;
  std::optional<KernelProbe> kernel;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t claim1_samples = 8;
  /// Highest order of P-variables sampled; defaults to the highest leader
  /// order plus one.
  std::optional<std::uint32_t> sample_order;
  std::size_t max_points = 4096;
  /// Total degree bound of the B-monomials in the kernel probe.
  std::uint32_t kernel_degree = 2;
  std::size_t kernel_p_vars = 3;
  SaturationOptions saturation;
};

/// Two instances built from the decomposition: (u, u) against (w, -w) and
/// (g) against (w), with w the least P-variable and g the first element of G
/// inside R[V_B]. Empty when P is trivial.
std::vector<DependenceInstance> default_instances(const StructureDecomposition& d, std::uint32_t order_bound);

/// Desk-scale checks of Claims 1-7 at prolongation order k. The ideal p is
/// the one generated by `gens`; samples feed Claim 3, instances Claim 5.
VerificationReport verify_claims(const StructureDecomposition& d, const std::vector<DiffPoly>& gens,
                                 const std::vector<DiffPoly>& samples,
                                 const std::vector<DependenceInstance>& instances, std::uint32_t k,
                                 const VerifyOptions& opts = {});

}  // namespace dalg
