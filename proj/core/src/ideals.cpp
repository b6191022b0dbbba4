#include "dalg/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dalg/error.hpp"
#include "dalg/text.hpp"

namespace dalg {

namespace {

struct PolyLess {
  bool operator()(const DiffPoly& a, const DiffPoly& b) const { return a.compare(b) < 0; }
};

void extend_ops(std::vector<DerivOp>& out, std::vector<std::uint32_t>& alpha, std::uint32_t i,
                std::uint32_t remaining) {
  if (i == alpha.size()) {
    out.push_back(DerivOp::from_exponents(alpha));
    return;
  }
  for (std::uint32_t a = 0; a <= remaining; ++a) {
    alpha[i] = a;
    extend_ops(out, alpha, i + 1, remaining - a);
  }
  alpha[i] = 0;
}

ZeroSeparantError with_element_text(const ZeroSeparantError& e, const AutoreducedSet& G) {
  return ZeroSeparantError(e.element(), std::string(e.what()) + ": " + to_text(G[e.element()]));
}

// Over Q: integer coefficients with content 1 and positive leading
// coefficient. Otherwise: leading coefficient 1.
DiffPoly normalized(const DiffPoly& f) {
  if (f.is_zero()) return f;
  const BaseRing& R = f.base();
  if (R.spec().kind != BaseKind::Rationals) return f.scaled(R.inv(f.terms().front().coeff));
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    const mpq_class& c = t.coeff.constant();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(f.terms().front().coeff.constant()) < 0) scale = -scale;
  return f.scaled(R.from_rational(scale));
}

std::vector<DiffPoly> nonzero_unique(std::vector<DiffPoly> polys) {
  std::set<DiffPoly, PolyLess> seen;
  std::vector<DiffPoly> out;
  for (auto& p : polys)
    if (!p.is_zero() && seen.insert(p).second) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<DerivOp> derivation_operators(std::uint32_t m, std::uint32_t k) {
  std::vector<DerivOp> out;
  std::vector<std::uint32_t> alpha(m, 0);
  extend_ops(out, alpha, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DiffPoly> prolong(const std::vector<DiffPoly>& gens, std::uint32_t k) {
  std::vector<DiffPoly> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& theta : derivation_operators(g.ring().m(), k)) out.push_back(g.derive(theta));
  }
  return nonzero_unique(std::move(out));
}

std::optional<DiffPoly> delta_polynomial(const DiffPoly& f, const DiffPoly& g) {
  const DerivVar uf = leader(f), ug = leader(g);
  if (uf.var != ug.var) return std::nullopt;
  const DerivOp v = uf.op.lcm(ug.op);
  return separant(g) * f.derive(uf.op.quotient_of(v)) - separant(f) * g.derive(ug.op.quotient_of(v));
}

AutoreducedSet basic_set(const std::vector<DiffPoly>& F) {
  std::vector<DiffPoly> candidates;
  for (const auto& f : F)
    if (!f.is_constant()) candidates.push_back(f);
  std::sort(candidates.begin(), candidates.end(), [](const DiffPoly& a, const DiffPoly& b) {
    const auto c = rank_of_poly(a) <=> rank_of_poly(b);
    return c != 0 ? c < 0 : a.compare(b) < 0;
  });
  std::vector<DiffPoly> chosen;
  for (const auto& c : candidates)
    if (is_reduced(c, chosen)) chosen.push_back(c);
  return AutoreducedSet(std::move(chosen));
}

CharsetResult ritt_wu_charset(const std::vector<DiffPoly>& F, const CharsetOptions& opts) {
  CharsetResult res;
  std::vector<DiffPoly> work;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    if (f.is_constant() && !res.nonzero_constant_remainder) {
      res.nonzero_constant_remainder = true;
      res.constant_remainder = f;
    }
    work.push_back(f);
  }
  work = nonzero_unique(std::move(work));
  if (res.nonzero_constant_remainder) {
    res.charset = basic_set(work);
    return res;
  }

  std::optional<AutoRank> previous;
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= opts.max_iterations) throw Error(ErrorCode::BudgetExceeded, "characteristic set iteration budget exhausted");
    AutoreducedSet G = basic_set(work);
    AutoRank rank = G.rank();
    if (previous && !(rank < *previous))
      throw std::logic_error("auto-rank failed to decrease across a Ritt-Wu iteration");

    std::set<DiffPoly, PolyLess> in_G(G.begin(), G.end());
    std::vector<DiffPoly> remainders;
    for (const auto& f : work) {
      if (in_G.count(f)) continue;
      DiffPoly r;
      try {
        r = ritt_reduce(f, G, opts.reduce).remainder;
      } catch (const ZeroSeparantError& e) {
        throw with_element_text(e, G);
      }
      if (r.is_zero()) continue;
      if (r.is_constant()) {
        res.trace.push_back({rank, work.size(), 0});
        res.nonzero_constant_remainder = true;
        res.constant_remainder = r;
        res.charset = std::move(G);
        return res;
      }
      remainders.push_back(normalized(r));
    }
    remainders = nonzero_unique(std::move(remainders));
    res.trace.push_back({rank, work.size(), remainders.size()});
    if (remainders.empty()) {
      for (std::size_t i = 0; i < G.size(); ++i) {
        bool nonzero = false;
        if (!G.separant(i).is_zero()) {
          try {
            nonzero = !ritt_reduce(G.separant(i), G, opts.reduce).remainder.is_zero();
          } catch (const ZeroSeparantError&) {
            nonzero = false;
          }
        }
        res.separant_remainder_nonzero.push_back(nonzero);
      }
      res.charset = std::move(G);
      return res;
    }
    work.insert(work.end(), remainders.begin(), remainders.end());
    work = nonzero_unique(std::move(work));
    if (work.size() > opts.max_set_size)
      throw Error(ErrorCode::BudgetExceeded, "characteristic set working-set budget exhausted");
    std::size_t terms = 0;
    for (const auto& f : work) terms += f.terms().size();
    if (terms > opts.max_terms)
      throw Error(ErrorCode::BudgetExceeded, "characteristic set term budget exhausted");
    previous = std::move(rank);
  }
}

const char* to_string(Verdict v) { return v == Verdict::Yes ? "yes" : "not-found-at-order"; }

std::uint32_t default_order(const std::vector<DiffPoly>& polys) {
  std::uint32_t k = 0;
  for (const auto& p : polys) k = std::max(k, p.max_order());
  return k + 2;
}

namespace {

std::vector<DiffPoly> oracle_generators(const std::vector<DiffPoly>& generators,
                                        const std::vector<DiffPoly>& algebraic, std::uint32_t k) {
  std::vector<DiffPoly> gens = prolong(generators, k);
  gens.insert(gens.end(), algebraic.begin(), algebraic.end());
  return nonzero_unique(std::move(gens));
}

}  // namespace

SaturationOracle::SaturationOracle(DiffRingPtr ring, const std::vector<DiffPoly>& generators,
                                   const std::vector<DiffPoly>& algebraic_generators, const DiffPoly& H,
                                   std::uint32_t k, const SaturationOptions& opts)
    : ring_(ring),
      gens_(oracle_generators(generators, algebraic_generators, k)),
      H_(H),
      k_(k),
      opts_(opts),
      saturated_(ring, gens_, {}, H.is_constant() ? std::nullopt : std::optional<DiffPoly>(H), {},
                 opts.groebner) {
  if (H.is_zero()) throw Error(ErrorCode::InvalidArgument, "saturation by zero");
}

SaturationResult SaturationOracle::member(const DiffPoly& f) const {
  SaturationResult res;
  res.order = k_;
  res.num_generators = gens_.size();
  res.num_variables = saturated_.num_variables();
  if (!contains(f)) return res;
  res.verdict = Verdict::Yes;
  res.witness = witness(f);
  return res;
}

std::optional<std::uint32_t> SaturationOracle::witness(const DiffPoly& f) const {
  if (f.is_zero() || H_.is_constant()) return 0;
  if (!plain_) plain_.emplace(ring_, gens_, std::vector<std::vector<DerivVar>>{}, std::nullopt, H_.variables(), opts_.groebner);
  if (plain_->contains(f)) return 0;
  if (opts_.n_max == 0 || !plain_->contains(H_.pow(opts_.n_max) * f)) return std::nullopt;
  std::uint32_t lo = 1, hi = opts_.n_max;  // H^hi f is a member
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (plain_->contains(H_.pow(mid) * f)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

SaturationResult saturation_member(const SaturationQuery& q, const SaturationOptions& opts) {
  if (q.target.is_zero()) {
    SaturationResult res;
    res.verdict = Verdict::Yes;
    res.witness = 0;
    res.order = q.k;
    return res;
  }
  return SaturationOracle(q.target.ring_ptr(), q.generators, q.algebraic_generators, q.H, q.k, opts).member(q.target);
}

CoherenceReport coherence_check(const AutoreducedSet& G, const std::vector<DiffPoly>& aux, std::uint32_t k,
                                const SaturationOptions& opts) {
  for (std::size_t i = 0; i < G.size(); ++i)
    if (G.separant(i).is_zero()) throw ZeroSeparantError(i, "coherence requires nonzero separants: " + to_text(G[i]));
  CoherenceReport report;
  report.order = k;
  bool ok = true;
  for (const auto& a : aux) {
    const bool pr = a.is_constant() || is_partially_reduced(a, G.elements());
    report.aux_partially_reduced.push_back(pr);
    ok = ok && pr;
  }
  if (G.empty() && aux.empty()) {
    report.coherent = ok;
    return report;
  }
  const DiffRingPtr ring = G.empty() ? aux.front().ring_ptr() : G[0].ring_ptr();
  const DiffPoly H = H_of(G, ring);

  std::vector<DiffPoly> nonconstant_aux;
  for (const auto& a : aux)
    if (!a.is_zero()) nonconstant_aux.push_back(a);
  if (!nonconstant_aux.empty() && k > 0) {
    SaturationOracle oracle(ring, G.elements(), nonconstant_aux, H, k, opts);
    for (std::size_t i = 0; i < aux.size(); ++i) {
      for (const auto& theta : derivation_operators(ring->m(), k)) {
        if (theta.is_identity()) continue;
        ProlongedAuxVerdict v{i, theta, oracle.member(aux[i].derive(theta))};
        ok = ok && v.result.verdict == Verdict::Yes;
        report.prolonged_aux.push_back(std::move(v));
      }
    }
  }

  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      auto d = delta_polynomial(G[i], G[j]);
      if (!d) continue;
      const DerivVar v{G.leader(i).var, G.leader(i).op.lcm(G.leader(j).op)};
      std::vector<DiffPoly> restricted = nonconstant_aux;
      std::size_t count = 0;
      for (std::size_t h = 0; h < G.size(); ++h) {
        const DerivVar& uh = G.leader(h);
        if (uh.order() > v.order()) continue;
        for (const auto& tau : derivation_operators(ring->m(), v.order() - uh.order())) {
          if (!(uh.derived(tau) < v)) continue;
          restricted.push_back(G[h].derive(tau));
          ++count;
        }
      }
      PairVerdict pv;
      pv.first = i;
      pv.second = j;
      pv.delta = *d;
      pv.restricted_generators = count;
      pv.result = saturation_member({*d, {}, restricted, H, k}, opts);
      ok = ok && pv.result.verdict == Verdict::Yes;
      report.pairs.push_back(std::move(pv));
    }
  }
  report.coherent = ok;
  return report;
}

}  // namespace dalg
