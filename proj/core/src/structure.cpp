#include "dalg/structure.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "dalg/error.hpp"
#include "dalg/text.hpp"

namespace dalg {

namespace {

std::string join_vars(const std::vector<DerivVar>& vars, const DiffRing& ring) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + to_text(vars[i], ring);
  return out + "}";
}

std::string order_note(std::uint32_t k) { return " at order " + std::to_string(k); }

std::optional<Monomial> monomial_quotient(const Monomial& m, const Monomial& d) {
  std::vector<Monomial::Factor> out;
  for (const auto& [v, e] : d.factors())
    if (m.degree_in(v) < e) return std::nullopt;
  for (const auto& [v, e] : m.factors()) out.emplace_back(v, e - d.degree_in(v));
  return Monomial::from_factors(std::move(out));
}

// Exact division in the lexicographic term order of DiffPoly.
std::optional<DiffPoly> exact_quotient(const DiffPoly& f, const DiffPoly& c) {
  const BaseRing& R = f.base();
  if (c.is_constant()) return f.scaled(R.inv(c.constant_value()));
  DiffPoly q(f.ring_ptr()), r = f;
  const Term& lc = c.terms().front();
  while (!r.is_zero()) {
    const Term& lt = r.terms().front();
    auto m = monomial_quotient(lt.mono, lc.mono);
    if (!m) return std::nullopt;
    const BaseElem a = R.div(lt.coeff, lc.coeff);
    q += DiffPoly::from_terms(f.ring_ptr(), {{*m, a}});
    r -= c.times_monomial(*m, a);
  }
  return q;
}

std::size_t rank_of(const std::vector<DiffPoly>& polys) {
  std::map<Monomial, DiffPoly> pivots;
  for (DiffPoly f : polys) {
    while (!f.is_zero()) {
      const Term& lt = f.terms().front();
      auto it = pivots.find(lt.mono);
      if (it == pivots.end()) {
        const Monomial m = lt.mono;
        pivots.emplace(m, f.scaled(f.base().inv(lt.coeff)));
        break;
      }
      f -= it->second.scaled(lt.coeff);
    }
  }
  return pivots.size();
}

void monomials_rec(const DiffRingPtr& ring, const std::vector<DerivVar>& vars, std::size_t from,
                   std::uint32_t remaining, const DiffPoly& current, std::vector<DiffPoly>& out) {
  out.push_back(current);
  if (remaining == 0) return;
  for (std::size_t i = from; i < vars.size(); ++i)
    monomials_rec(ring, vars, i, remaining - 1, current * DiffPoly::variable(ring, vars[i]), out);
}

std::vector<DiffPoly> monomials_upto(const DiffRingPtr& ring, const std::vector<DerivVar>& vars,
                                     std::uint32_t degree) {
  std::vector<DiffPoly> out;
  monomials_rec(ring, vars, 0, degree, DiffPoly::integer(ring, 1), out);
  return out;
}

BaseElem random_nonzero(std::mt19937_64& rng, const BaseRing& R) {
  std::uniform_int_distribution<int> dist(-5, 5);
  for (;;) {
    const int v = dist(rng);
    if (v == 0) continue;
    BaseElem c = R.from_int(v);
    if (!R.is_zero(c)) return c;
  }
}

DiffPoly random_over(std::mt19937_64& rng, const DiffRingPtr& ring, const std::vector<DerivVar>& vars,
                     std::uint32_t max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms), pick(0, vars.size() - 1);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  std::vector<Term> terms;
  for (std::size_t t = nterms(rng); t > 0; --t) {
    std::vector<Monomial::Factor> fs;
    for (std::uint32_t e = deg(rng); e > 0; --e) fs.emplace_back(vars[pick(rng)], 1);
    terms.push_back({Monomial::from_factors(std::move(fs)), random_nonzero(rng, ring->base())});
  }
  return DiffPoly::from_terms(ring, std::move(terms));
}

bool vars_within(const DiffPoly& f, const std::function<bool(const DerivVar&)>& pred,
                 std::optional<DerivVar>* offender = nullptr) {
  for (const auto& v : f.variables())
    if (!pred(v)) {
      if (offender) *offender = v;
      return false;
    }
  return true;
}

void finish(ClaimVerdict& c) {
  if (c.checks.empty()) {
    c.status = ClaimStatus::Vacuous;
    return;
  }
  for (const auto& ch : c.checks)
    if (!ch.passed) {
      c.status = ClaimStatus::Fail;
      if (!c.counterexample) c.counterexample = ch.subject + ": " + ch.evidence;
      return;
    }
  if (c.status != ClaimStatus::Inconclusive) c.status = ClaimStatus::Pass;
}

std::string verdict_text(const SaturationResult& r) {
  if (r.verdict == Verdict::NotFoundAtOrder) return "not found" + order_note(r.order);
  std::string s = "member" + order_note(r.order);
  if (r.witness) s += ", witness n = " + std::to_string(*r.witness);
  return s;
}

}  // namespace

bool StructureDecomposition::in_V(const DerivVar& v) const {
  for (std::size_t i = 0; i < G.size(); ++i)
    if (is_proper_derivative(v, G.leader(i))) return false;
  return true;
}

bool StructureDecomposition::in_V_B(const DerivVar& v) const {
  return std::binary_search(V_B.begin(), V_B.end(), v);
}

std::vector<DerivVar> StructureDecomposition::P_vars(std::uint32_t order_bound) const {
  std::vector<DerivVar> out;
  for (std::uint32_t i = 0; i < ring->n(); ++i)
    for (const auto& op : derivation_operators(ring->m(), order_bound)) {
      const DerivVar v{i, op};
      if (in_V(v) && !in_V_B(v)) out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

StructureDecomposition decompose(const DiffRingPtr& ring, const std::vector<DiffPoly>& gens,
                                 const std::vector<DerivVar>& extras, std::uint32_t k,
                                 const StructureOptions& opts) {
  for (const auto& g : gens)
    if (!(g.ring() == *ring)) throw Error(ErrorCode::RingMismatch, "generator over a different ring");
  StructureDecomposition d;
  d.ring = ring;
  d.order = k;

  CharsetResult cr;
  try {
    cr = ritt_wu_charset(gens, opts.charset);
  } catch (const ZeroSeparantError& e) {
    throw Error(ErrorCode::ZeroSeparantInCharset, e.what());
  }
  if (cr.nonzero_constant_remainder)
    throw Error(ErrorCode::UnitIdeal, "a nonzero element of R lies in the saturated ideal: " +
                                          to_text(*cr.constant_remainder));
  d.G = cr.charset;
  for (std::size_t i = 0; i < d.G.size(); ++i)
    if (d.G.separant(i).is_zero())
      throw Error(ErrorCode::ZeroSeparantInCharset, "zero separant in the characteristic set: " + to_text(d.G[i]));
  d.H_poly = H_of(d.G, ring);

  std::set<DerivVar> yp;
  auto close_down = [&](const DerivVar& v) {
    for (const auto& op : derivation_operators(ring->m(), v.order()))
      if (op.divides(v.op)) yp.insert({v.var, op});
  };
  for (const auto& f : gens)
    for (const auto& v : f.variables())
      if (d.in_V(v)) close_down(v);
  for (const auto& g : d.G)
    for (const auto& v : g.variables())
      if (d.in_V(v)) close_down(v);
  for (const auto& v : extras) {
    if (v.var >= ring->n()) throw Error(ErrorCode::IndexOutOfRange, "extra derivative of a missing indeterminate");
    if (!d.in_V(v))
      throw Error(ErrorCode::ExtrasNotPartiallyReduced,
                  to_text(v, *ring) + " is a proper derivative of a leader of the characteristic set");
    yp.insert(v);
  }
  d.Yprime.assign(yp.begin(), yp.end());

  std::set<DerivVar> vb = yp;
  for (const auto& g : d.G)
    for (const auto& v : g.variables())
      if (d.in_V(v)) vb.insert(v);
  d.V_B.assign(vb.begin(), vb.end());

  const auto prolonged = prolong(gens, k);
  if (!prolonged.empty()) {
    std::set<DerivVar> others;
    for (const auto& p : prolonged)
      for (const auto& v : p.variables())
        if (!yp.count(v)) others.insert(v);
    std::vector<std::vector<DerivVar>> blocks;
    if (!others.empty()) blocks.emplace_back(others.begin(), others.end());
    if (!d.Yprime.empty()) blocks.push_back(d.Yprime);
    const std::optional<DiffPoly> sat =
        d.H_poly.is_constant() ? std::nullopt : std::optional<DiffPoly>(d.H_poly);
    AlgebraicIdeal ideal(ring, prolonged, blocks, sat, d.Yprime, opts.saturation.groebner);
    d.p1_gens = ideal.eliminate_to(yp);
  }
  return d;
}

Localization express_in_localization(const DiffPoly& f, const StructureDecomposition& d) {
  ReductionCertificate cert = ritt_reduce(f, d.G);
  Localization loc{cert.remainder, cert.h_exponents, std::move(cert)};
  return loc;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Vacuous: return "vacuous";
    case ClaimStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimVerdict& c) {
    return c.status == ClaimStatus::Pass || c.status == ClaimStatus::Vacuous;
  });
}

std::vector<DependenceInstance> default_instances(const StructureDecomposition& d, std::uint32_t order_bound) {
  const auto pv = d.P_vars(order_bound);
  if (pv.empty()) return {};
  const DerivVar& w = pv.front();
  const DiffPoly wp = DiffPoly::variable(d.ring, w);
  DiffPoly u = DiffPoly::integer(d.ring, 1);
  auto same = std::find_if(d.V_B.begin(), d.V_B.end(), [&](const DerivVar& v) { return v.var == w.var; });
  if (same != d.V_B.end())
    u = DiffPoly::variable(d.ring, *same);
  else if (!d.V_B.empty())
    u = DiffPoly::variable(d.ring, d.V_B.front());
  std::vector<DependenceInstance> out{{{u, u}, {wp, -wp}}};
  for (const auto& g : d.G) {
    const auto vars = g.variables();
    if (std::all_of(vars.begin(), vars.end(), [&](const DerivVar& v) { return d.in_V_B(v); })) {
      out.push_back({{g}, {wp}});
      break;
    }
  }
  return out;
}

VerificationReport verify_claims(const StructureDecomposition& d, const std::vector<DiffPoly>& gens,
                                 const std::vector<DiffPoly>& samples,
                                 const std::vector<DependenceInstance>& instances, std::uint32_t k,
                                 const VerifyOptions& opts) {
  const DiffRingPtr& ring = d.ring;
  const BaseRing& R = ring->base();
  const DiffPoly one = DiffPoly::integer(ring, 1);
  std::mt19937_64 rng(opts.seed);
  VerificationReport rep;
  rep.order = k;

  std::uint32_t leader_order = 0;
  for (std::size_t i = 0; i < d.G.size(); ++i) leader_order = std::max(leader_order, d.G.leader(i).order());
  const std::uint32_t sample_order = opts.sample_order.value_or(leader_order + 1);

  const SaturationOracle plain(ring, gens, {}, one, k, opts.saturation);
  const SaturationOracle sat(ring, gens, {}, d.H_poly, k, opts.saturation);
  const auto in_V = [&](const DerivVar& v) { return d.in_V(v); };
  const auto in_V_B = [&](const DerivVar& v) { return d.in_V_B(v); };

  // Claim 1
  {
    ClaimVerdict c{1, "phi restricted to R[V \\ V_B] is injective", ClaimStatus::Pass, {}, {}};
    const auto pv = d.P_vars(sample_order);
    for (std::size_t s = 0; s < opts.claim1_samples; ++s) {
      const DiffPoly f = pv.empty() ? DiffPoly::constant(ring, random_nonzero(rng, R))
                                    : random_over(rng, ring, pv, 2, 3);
      if (f.is_zero()) continue;
      const SaturationResult res = plain.member(f);
      c.checks.push_back({to_text(f), res.verdict != Verdict::Yes, verdict_text(res)});
      if (res.verdict == Verdict::Yes && !c.counterexample)
        c.counterexample = "nonzero " + to_text(f) + " in R[V \\ V_B] lies in the ideal" + order_note(k);
    }
    finish(c);
    rep.claims.push_back(std::move(c));
  }

  // Claim 2
  {
    ClaimVerdict c{2, "h is nonzero", ClaimStatus::Pass, {}, {}};
    const DiffPoly rem = ritt_reduce(d.H_poly, d.G, {false, 100000, 1000000}).remainder;
    c.checks.push_back({"H = " + to_text(d.H_poly), !rem.is_zero(), "remainder modulo G: " + to_text(rem)});
    const SaturationResult hres = plain.member(d.H_poly);
    c.checks.push_back({"H = " + to_text(d.H_poly), hres.verdict != Verdict::Yes, verdict_text(hres)});
    if (hres.verdict == Verdict::Yes) c.counterexample = "H lies in the ideal" + order_note(k);

    std::set<DiffPoly, bool (*)(const DiffPoly&, const DiffPoly&)> tried(
        [](const DiffPoly& a, const DiffPoly& b) { return a.compare(b) < 0; });
    for (std::size_t i = 0; i < d.G.size(); ++i) {
      std::vector<DiffPoly> candidates{d.G.initial(i), d.G.separant(i)};
      for (const auto& v : d.G[i].variables()) candidates.push_back(DiffPoly::variable(ring, v));
      for (const auto& cand : candidates) {
        if (cand.is_constant() || !tried.insert(cand).second) continue;
        const auto q = exact_quotient(d.G[i], cand);
        if (!q || q->is_constant()) continue;
        const bool split = plain.contains(cand) || plain.contains(*q);
        const std::string subject = to_text(d.G[i]) + " = (" + to_text(cand) + ")*(" + to_text(*q) + ")";
        c.checks.push_back({subject, split,
                            split ? "a factor lies in the ideal" : "neither factor found in the ideal" + order_note(k)});
        if (!split && !c.counterexample)
          c.counterexample = "zero divisor: " + subject + " lies in the ideal, neither factor found" + order_note(k);
      }
    }
    finish(c);
    rep.claims.push_back(std::move(c));
  }

  // Claim 3
  {
    ClaimVerdict c{3, "S_h = (B.P)_h", ClaimStatus::Pass, {}, {}};
    std::optional<DerivVar> bad;
    for (const auto& v : d.Yprime)
      if (!d.in_V(v)) c.checks.push_back({"Y'", false, to_text(v, *ring) + " is not in V"});
    for (const auto& v : d.V_B)
      if (!d.in_V(v)) c.checks.push_back({"V_B", false, to_text(v, *ring) + " is not in V"});
    for (std::size_t i = 0; i < d.G.size(); ++i) {
      const bool ok = vars_within(d.G[i], in_V_B, &bad);
      c.checks.push_back({"g = " + to_text(d.G[i]), ok,
                          ok ? "in R[V_B]" : "involves " + to_text(*bad, *ring) + ", outside V_B = " +
                                                 join_vars(d.V_B, *ring)});
    }
    {
      const bool ok = vars_within(d.H_poly, in_V_B, &bad);
      c.checks.push_back({"H = " + to_text(d.H_poly), ok,
                          ok ? "in R[V_B]" : "involves " + to_text(*bad, *ring) + ", outside V_B"});
    }
    std::vector<DiffPoly> fs = samples;
    if (fs.empty()) {
      for (std::size_t i = 0; i < d.G.size(); ++i)
        for (std::uint32_t j = 0; j < ring->m(); ++j)
          for (std::uint32_t t = 1; t <= 2; ++t)
            fs.push_back(DiffPoly::variable(ring, d.G.leader(i).derived(DerivOp::single(j, t))));
      std::vector<DerivVar> low;
      for (std::uint32_t i = 0; i < ring->n(); ++i)
        for (const auto& op : derivation_operators(ring->m(), sample_order)) low.push_back({i, op});
      fs.push_back(random_over(rng, ring, low, 2, 3));
    }
    for (const auto& f : fs) {
      const Localization loc = express_in_localization(f, d);
      const bool verified = verify_certificate(f, d.G, loc.certificate);
      const bool in_v = vars_within(loc.numerator, in_V, &bad);
      std::string ev = "numerator " + to_text(loc.numerator) + ", H = " +
                       to_text(h_element(d.G, loc.h_exponents, ring));
      if (!verified) ev += ", certificate does not verify";
      if (!in_v) ev += ", numerator involves " + to_text(*bad, *ring) + " outside V";
      c.checks.push_back({to_text(f), verified && in_v, ev});
    }
    finish(c);
    rep.claims.push_back(std::move(c));
  }

  // Claim 4
  {
    ClaimVerdict c{4, "S_h is differentially finitely presented (membership spot checks)", ClaimStatus::Pass, {}, {}};
    for (const auto& g : d.G) {
      const SaturationResult res = sat.member(g);
      c.checks.push_back({"g = " + to_text(g), res.verdict == Verdict::Yes, verdict_text(res)});
    }
    for (const auto& p : d.p1_gens) {
      const bool ok = sat.contains(p);
      c.checks.push_back({"p1 generator " + to_text(p), ok, ok ? "member" : "not found" + order_note(k)});
    }
    std::vector<DiffPoly> alg(d.G.begin(), d.G.end());
    alg.insert(alg.end(), d.p1_gens.begin(), d.p1_gens.end());
    if (!alg.empty()) {
      const SaturationOracle cor(ring, {}, alg, d.H_poly, 0, opts.saturation);
      std::vector<DiffPoly> targets;
      for (const auto& g : gens)
        for (const auto& op : derivation_operators(ring->m(), 2)) {
          if (op.is_identity()) continue;
          targets.push_back(partial_reduce(g.derive(op), d.G).remainder);
        }
      for (std::size_t s = 0; s < 2; ++s) {
        DiffPoly f(ring);
        for (const auto& a : alg)
          f += (d.V_B.empty() ? DiffPoly::constant(ring, random_nonzero(rng, R)) : random_over(rng, ring, d.V_B, 1, 2)) * a;
        targets.push_back(f);
      }
      for (const auto& f : targets) {
        const SaturationResult res = cor.member(f);
        c.checks.push_back({"partially reduced " + to_text(f), res.verdict == Verdict::Yes,
                            "((G) + p1) : H^inf, " + verdict_text(res)});
      }
    }
    finish(c);
    rep.claims.push_back(std::move(c));
  }

  // Claim 5
  {
    ClaimVerdict c{5, "linear dependence over P transfers to R", ClaimStatus::Pass, {}, {}};
    const auto insts = instances.empty() ? default_instances(d, sample_order) : instances;
    for (const auto& inst : insts) {
      if (inst.b.empty() || inst.b.size() != inst.p.size() || inst.p[0].is_zero())
        throw Error(ErrorCode::InvalidArgument, "dependence instance needs equally many b and p, with p_1 nonzero");
      DiffPoly sum(ring);
      std::optional<std::string> misplaced;
      for (std::size_t i = 0; i < inst.b.size(); ++i) {
        if (!misplaced && !vars_within(inst.b[i], in_V_B)) misplaced = to_text(inst.b[i]) + " is not in R[V_B]";
        if (!misplaced && !vars_within(inst.p[i], [&](const DerivVar& v) { return d.in_V(v) && !d.in_V_B(v); }))
          misplaced = to_text(inst.p[i]) + " is not in R[V \\ V_B]";
        sum += inst.b[i] * inst.p[i];
      }
      if (misplaced) {
        c.checks.push_back({"sum b_i p_i = " + to_text(sum), false, *misplaced});
        continue;
      }
      if (!ritt_reduce(sum, d.G).remainder.is_zero())
        throw Error(ErrorCode::InvalidArgument, "sum b_i p_i does not reduce to 0: " + to_text(sum));

      DependenceVerdict dv;
      dv.instance = inst;
      std::set<DerivVar> pvs;
      for (const auto& p : inst.p)
        for (const auto& v : p.variables()) pvs.insert(v);
      const std::vector<DerivVar> pv(pvs.begin(), pvs.end());
      std::vector<BaseElem> values;
      if (R.characteristic() == 0) {
        std::size_t L = 2;
        while (L < 9) {
          double total = 1;
          for (std::size_t j = 0; j < pv.size(); ++j) total *= static_cast<double>(L + 1);
          if (total > static_cast<double>(opts.max_points)) break;
          ++L;
        }
        for (std::size_t j = 0; j < L; ++j) {
          const long long v = static_cast<long long>((j + 1) / 2);
          values.push_back(R.from_int(j % 2 ? v : -v));
        }
      } else {
        for (std::uint64_t j = 0; j < R.characteristic(); ++j) values.push_back(R.from_int(static_cast<long long>(j)));
      }
      std::vector<std::size_t> idx(pv.size(), 0);
      for (std::size_t tries = 0; tries < opts.max_points; ++tries) {
        std::map<DerivVar, DiffPoly> sigma;
        for (std::size_t j = 0; j < pv.size(); ++j) sigma.emplace(pv[j], DiffPoly::constant(ring, values[idx[j]]));
        if (!inst.p[0].substitute(sigma).is_zero()) {
          dv.point_found = true;
          for (std::size_t j = 0; j < pv.size(); ++j) dv.point.emplace(pv[j], values[idx[j]]);
          DiffPoly spec(ring);
          for (std::size_t i = 0; i < inst.p.size(); ++i) {
            const DiffPoly ri = inst.p[i].substitute(sigma);
            dv.r.push_back(ri.is_zero() ? R.zero() : ri.constant_value());
            spec += inst.b[i].scaled(dv.r.back());
          }
          dv.specialized = spec;
          break;
        }
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == values.size()) idx[j++] = 0;
        if (j == idx.size()) break;
      }
      std::string subject = "sum b_i p_i = " + to_text(sum);
      if (!dv.point_found) {
        c.status = ClaimStatus::Inconclusive;
        c.checks.push_back({subject, true, "no point with p_1 nonzero found within the search budget"});
      } else {
        dv.membership = sat.member(dv.specialized);
        const bool ok = dv.membership->verdict == Verdict::Yes;
        std::string rv;
        for (std::size_t i = 0; i < dv.r.size(); ++i) rv += (i ? ", " : "") + to_text(dv.r[i], R);
        c.checks.push_back({subject, ok,
                            "r = (" + rv + "), sum r_i b_i = " + to_text(dv.specialized) + ": " +
                                verdict_text(*dv.membership)});
        if (!ok && !c.counterexample)
          c.counterexample = "specialized combination " + to_text(dv.specialized) + " not found in the saturated ideal" + order_note(k);
      }
      rep.dependences.push_back(std::move(dv));
    }
    finish(c);
    rep.claims.push_back(std::move(c));
  }

  // Claim 6
  {
    ClaimVerdict c{6, "B is finitely generated and B_h finitely presented", ClaimStatus::Pass, {}, {}};
    c.checks.push_back({"V_B", true, std::to_string(d.V_B.size()) + " generators " + join_vars(d.V_B, *ring)});
    c.checks.push_back({"p1", true, std::to_string(d.p1_gens.size()) + " relations in R[Y']"});
    finish(c);
    rep.claims.push_back(std::move(c));
  }

  // Claim 7
  {
    ClaimVerdict c{7, "B (x) P -> B.P is injective (bounded-degree probe)", ClaimStatus::Pass, {}, {}};
    const auto bmons = monomials_upto(ring, d.V_B, opts.kernel_degree);
    auto pv = d.P_vars(sample_order);
    if (pv.size() > opts.kernel_p_vars) pv.resize(opts.kernel_p_vars);
    std::vector<DiffPoly> pmons{one};
    for (const auto& v : pv) pmons.push_back(DiffPoly::variable(ring, v));
    std::vector<DiffPoly> bnf, prod;
    for (const auto& b : bmons) bnf.push_back(sat.ideal().normal_form(b));
    for (const auto& b : bmons)
      for (const auto& p : pmons) prod.push_back(sat.ideal().normal_form(b * p));
    KernelProbe kp;
    kp.b_monomials = bmons.size();
    kp.p_monomials = pmons.size();
    kp.rank_b = rank_of(bnf);
    kp.rank_products = rank_of(prod);
    kp.kernel_dim = prod.size() - kp.rank_products;
    kp.predicted_kernel_dim = (bmons.size() - kp.rank_b) * pmons.size();
    kp.agrees = kp.kernel_dim == kp.predicted_kernel_dim;
    c.checks.push_back({"multiplication matrix", kp.agrees,
                        std::to_string(kp.b_monomials) + " B-monomials x " + std::to_string(kp.p_monomials) +
                            " P-monomials, kernel dimension " + std::to_string(kp.kernel_dim) + ", predicted " +
                            std::to_string(kp.predicted_kernel_dim) + order_note(k)});
    if (!kp.agrees)
      c.counterexample = "products of B- and P-monomials satisfy " +
                         std::to_string(kp.kernel_dim - std::min(kp.kernel_dim, kp.predicted_kernel_dim)) +
                         " relations beyond those induced by R-dependencies in B" + order_note(k);
    rep.kernel = kp;
    finish(c);
    rep.claims.push_back(std::move(c));
  }
  return rep;
}

}  // namespace dalg
