#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dalg/ranking.hpp"

namespace dalg {

enum class ReductionKind { Partial, Full };

/// Witness of the congruence H f = f~ + sum_{(theta, g)} c_{theta,g} theta(g),
/// with H = prod I(g_i)^{n_i} S(g_i)^{m_i} read from `h_exponents`.
struct ReductionCertificate {
  using Key = std::pair<DerivOp, std::size_t>;  // (theta, index of g in G)

  ReductionKind kind = ReductionKind::Full;
  HExponents h_exponents;
  std::map<Key, DiffPoly> multipliers;
  DiffPoly remainder;
  /// Rank of the derivative power eliminated at each step; strictly decreasing.
  std::vector<Rank> trace;

  std::uint32_t max_prolongation_order() const;
};

struct ReduceOptions {
  bool build_certificate = true;
  std::size_t max_steps = 100000;
  /// Bound on the size of the running remainder.
  std::size_t max_terms = 1000000;
};

/// Eliminates every proper derivative of a leader of G from f, highest rank
/// first. Only separant powers accrue. Throws ZeroSeparantError.
ReductionCertificate partial_reduce(const DiffPoly& f, const AutoreducedSet& G,
                                    const ReduceOptions& opts = {});

/// Full Ritt-Kolchin reduction: the remainder is reduced with respect to G.
ReductionCertificate ritt_reduce(const DiffPoly& f, const AutoreducedSet& G,
                                 const ReduceOptions& opts = {});

/// True iff the certificate identity holds exactly and the remainder has the
/// reducedness its kind claims.
bool verify_certificate(const DiffPoly& f, const AutoreducedSet& G, const ReductionCertificate& cert);

}  // namespace dalg
