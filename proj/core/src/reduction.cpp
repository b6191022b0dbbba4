#include "dalg/reduction.hpp"

#include <optional>

#include "dalg/error.hpp"

namespace dalg {

std::uint32_t ReductionCertificate::max_prolongation_order() const {
  std::uint32_t k = 0;
  for (const auto& [key, c] : multipliers) k = std::max(k, key.first.order());
  return k;
}

namespace {

struct Target {
  DerivVar var;
  std::size_t element;
  bool prolongation;  // eliminate a proper derivative rather than lower a leader degree
};

// Highest-rank offending derivative in r. Among leaders having `var` as a
// proper derivative, G's increasing order picks the lowest-ranked one.
std::optional<Target> find_target(const DiffPoly& r, const AutoreducedSet& G, bool full) {
  const auto vars = r.variables();
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    const DerivVar& w = *it;
    for (std::size_t i = 0; i < G.size(); ++i)
      if (is_proper_derivative(w, G.leader(i))) return Target{w, i, true};
    if (!full) continue;
    for (std::size_t i = 0; i < G.size(); ++i)
      if (w == G.leader(i) && r.degree_in(w) >= G[i].degree_in(w)) return Target{w, i, false};
  }
  return std::nullopt;
}

class Reducer {
 public:
  Reducer(const AutoreducedSet& G, const ReduceOptions& opts, const DiffRingPtr& ring)
      : G_(G), opts_(opts), ring_(ring) {}

  ReductionCertificate run(const DiffPoly& f, bool full) {
    ReductionCertificate cert;
    cert.kind = full ? ReductionKind::Full : ReductionKind::Partial;
    cert.h_exponents.assign(G_.size(), {0, 0});
    DiffPoly r = f;
    std::size_t steps = 0;
    while (auto target = find_target(r, G_, full)) {
      const DerivVar& w = target->var;
      const std::size_t i = target->element;
      cert.trace.push_back(rank_of_power(w, r.degree_in(w), ring_->m()));

      DerivOp theta;
      const DiffPoly* divisor = &G_[i];
      const DiffPoly* lc = &G_.initial(i);
      if (target->prolongation) {
        if (G_.separant(i).is_zero())
          throw ZeroSeparantError(i, "elimination of a proper derivative of a leader with zero separant");
        theta = G_.leader(i).op.quotient_of(w.op);
        divisor = &prolongation(theta, i);
        lc = &G_.separant(i);
      }
      const std::uint32_t d = divisor->degree_in(w);
      const bool unit_lc = lc->is_constant();
      const BaseElem lc_inv = unit_lc ? r.base().inv(lc->constant_value()) : BaseElem();

      std::uint32_t count = 0;
      DiffPoly quotient(ring_);
      for (std::uint32_t k = r.degree_in(w); k >= d && !r.is_zero(); k = r.degree_in(w)) {
        if (++steps > opts_.max_steps) throw Error(ErrorCode::BudgetExceeded, "reduction step budget exhausted");
        if (r.terms().size() > opts_.max_terms) throw Error(ErrorCode::BudgetExceeded, "reduction term budget exhausted");
        DiffPoly t = r.coefficient(w, k);
        if (k > d) t = t.times_monomial(Monomial(w, k - d), r.base().one());
        if (unit_lc) {
          t = t.scaled(lc_inv);
          r -= t * *divisor;
          if (opts_.build_certificate) quotient += t;
        } else {
          r = *lc * r - t * *divisor;
          if (opts_.build_certificate) quotient = *lc * quotient + t;
          ++count;
        }
      }

      if (target->prolongation)
        cert.h_exponents[i].second += count;
      else
        cert.h_exponents[i].first += count;
      if (opts_.build_certificate) {
        if (count > 0) {
          const DiffPoly scale = lc->pow(count);
          for (auto& [key, c] : cert.multipliers) c = scale * c;
        }
        auto [it, inserted] = cert.multipliers.try_emplace({theta, i}, quotient);
        if (!inserted) it->second += quotient;
        if (it->second.is_zero()) cert.multipliers.erase(it);
      }
    }
    cert.remainder = std::move(r);
    return cert;
  }

 private:
  const DiffPoly& prolongation(const DerivOp& theta, std::size_t i) {
    auto key = std::make_pair(theta, i);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, G_[i].derive(theta)).first;
    return it->second;
  }

  const AutoreducedSet& G_;
  const ReduceOptions& opts_;
  DiffRingPtr ring_;
  std::map<std::pair<DerivOp, std::size_t>, DiffPoly> cache_;
};

}  // namespace

ReductionCertificate partial_reduce(const DiffPoly& f, const AutoreducedSet& G,
                                    const ReduceOptions& opts) {
  return Reducer(G, opts, f.ring_ptr()).run(f, false);
}

ReductionCertificate ritt_reduce(const DiffPoly& f, const AutoreducedSet& G,
                                 const ReduceOptions& opts) {
  return Reducer(G, opts, f.ring_ptr()).run(f, true);
}

bool verify_certificate(const DiffPoly& f, const AutoreducedSet& G, const ReductionCertificate& cert) {
  if (cert.h_exponents.size() != G.size()) return false;
  if (!cert.remainder.ring_ptr() || !(cert.remainder.ring() == f.ring())) return false;
  for (const auto& [key, c] : cert.multipliers)
    if (key.second >= G.size()) return false;
  DiffPoly h(f.ring_ptr());
  try {
    h = h_element(G, cert.h_exponents, f.ring_ptr());
  } catch (const ZeroSeparantError&) {
    return false;
  }
  DiffPoly lhs = h * f - cert.remainder;
  for (const auto& [key, c] : cert.multipliers) lhs -= c * G[key.second].derive(key.first);
  if (!lhs.is_zero()) return false;
  const auto& elems = G.elements();
  return cert.kind == ReductionKind::Full ? is_reduced(cert.remainder, elems)
                                          : is_partially_reduced(cert.remainder, elems);
}

}  // namespace dalg
