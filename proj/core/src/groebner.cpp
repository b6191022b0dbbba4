#include "dalg/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "dalg/error.hpp"

namespace dalg {

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return blocks({nvars}); }

MonomialOrder MonomialOrder::blocks(std::vector<std::size_t> block_sizes) {
  MonomialOrder o;
  block_sizes.erase(std::remove(block_sizes.begin(), block_sizes.end(), 0u), block_sizes.end());
  o.nvars_ = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
  o.blocks_ = std::move(block_sizes);
  return o;
}

std::strong_ordering MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  std::size_t start = 0;
  for (std::size_t size : blocks_) {
    const std::size_t stop = start + size;
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = start; i < stop; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = stop; i-- > start;)
      if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    start = stop;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// AlgRing

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& big, const Exponents& small) {
  Exponents r(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) r[i] = big[i] - small[i];
  return r;
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::uint32_t degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool is_constant(const AlgPoly& p) {
  return p.terms.size() == 1 && degree(p.terms.front().first) == 0;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
  std::uint32_t sugar;
};

}  // namespace

AlgPoly AlgRing::combine(std::vector<std::pair<Exponents, BaseElem>> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const auto& a, const auto& b) { return order_.compare(a.first, b.first) > 0; });
  AlgPoly p;
  for (auto& t : terms) {
    if (!p.terms.empty() && p.terms.back().first == t.first) {
      p.terms.back().second = base_->add(p.terms.back().second, t.second);
      continue;
    }
    if (!p.terms.empty() && base_->is_zero(p.terms.back().second)) p.terms.pop_back();
    p.terms.push_back(std::move(t));
  }
  if (!p.terms.empty() && base_->is_zero(p.terms.back().second)) p.terms.pop_back();
  for (const auto& t : p.terms) p.sugar = std::max(p.sugar, degree(t.first));
  return p;
}

AlgPoly AlgRing::from_terms(std::vector<std::pair<Exponents, BaseElem>> terms) const {
  for (const auto& t : terms)
    if (t.first.size() != nvars()) throw Error(ErrorCode::InvalidArgument, "exponent vector length");
  return combine(std::move(terms));
}

AlgPoly AlgRing::add(const AlgPoly& a, const AlgPoly& b) const {
  auto terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return combine(std::move(terms));
}

AlgPoly AlgRing::sub(const AlgPoly& a, const AlgPoly& b) const {
  auto terms = a.terms;
  for (const auto& t : b.terms) terms.emplace_back(t.first, base_->neg(t.second));
  return combine(std::move(terms));
}

AlgPoly AlgRing::mul(const AlgPoly& a, const AlgPoly& b) const {
  std::vector<std::pair<Exponents, BaseElem>> terms;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) terms.emplace_back(product(x.first, y.first), base_->mul(x.second, y.second));
  return combine(std::move(terms));
}

AlgPoly AlgRing::monic(const AlgPoly& a) const {
  if (a.is_zero() || base_->is_one(a.terms.front().second)) return a;
  const BaseElem c = base_->inv(a.terms.front().second);
  AlgPoly r;
  r.sugar = a.sugar;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.emplace_back(t.first, base_->mul(t.second, c));
  return r;
}

// p - c * x^shift * g, merged in order.
AlgPoly AlgRing::sub_multiple(const AlgPoly& p, const Exponents& shift, const BaseElem& c,
                              const AlgPoly& g) const {
  AlgPoly r;
  r.sugar = std::max(p.sugar, g.sugar + degree(shift));
  r.terms.reserve(p.terms.size() + g.terms.size());
  auto x = p.terms.begin();
  auto y = g.terms.begin();
  Exponents ym;
  bool have_y = false;
  auto load_y = [&] {
    have_y = y != g.terms.end();
    if (have_y) ym = product(y->first, shift);
  };
  load_y();
  while (x != p.terms.end() || have_y) {
    const auto cmp = !have_y ? std::strong_ordering::greater
                     : x == p.terms.end() ? std::strong_ordering::less
                                          : order_.compare(x->first, ym);
    if (cmp > 0) {
      r.terms.push_back(*x++);
    } else if (cmp < 0) {
      r.terms.emplace_back(ym, base_->neg(base_->mul(c, y->second)));
      ++y;
      load_y();
    } else {
      BaseElem v = base_->sub(x->second, base_->mul(c, y->second));
      if (!base_->is_zero(v)) r.terms.emplace_back(x->first, std::move(v));
      ++x;
      ++y;
      load_y();
    }
  }
  return r;
}

namespace {

const AlgPoly* find_divisor(const std::vector<const AlgPoly*>& basis, const Exponents& m) {
  for (const AlgPoly* g : basis)
    if (divides(g->lm(), m)) return g;
  return nullptr;
}

}  // namespace

AlgPoly AlgRing::normal_form(const AlgPoly& f, const std::vector<AlgPoly>& basis, std::size_t* steps,
                             std::size_t max_steps) const {
  std::vector<const AlgPoly*> ptrs;
  for (const auto& g : basis)
    if (!g.is_zero()) ptrs.push_back(&g);
  std::size_t local = 0;
  return reduce(f, ptrs, steps ? *steps : local, max_steps);
}

AlgPoly AlgRing::reduce(const AlgPoly& f, const std::vector<const AlgPoly*>& basis, std::size_t& steps,
                        std::size_t max_steps) const {
  AlgPoly rem;
  AlgPoly p = f;
  std::size_t head = 0;  // p.terms[0, head) have been moved to the remainder
  while (head < p.terms.size()) {
    const Exponents& m = p.terms[head].first;
    const AlgPoly* g = find_divisor(basis, m);
    if (!g) {
      rem.terms.push_back(p.terms[head++]);
      continue;
    }
    if (++steps > max_steps) throw Error(ErrorCode::BudgetExceeded, "Groebner reduction budget exhausted");
    const BaseElem factor = base_->div(p.terms[head].second, g->terms.front().second);
    const Exponents shift = quotient(m, g->lm());
    if (head > 0) p.terms.erase(p.terms.begin(), p.terms.begin() + static_cast<std::ptrdiff_t>(head));
    p = sub_multiple(p, shift, factor, *g);
    head = 0;
  }
  rem.sugar = std::max(f.sugar, p.sugar);
  return rem;
}

std::vector<AlgPoly> AlgRing::groebner_basis(std::vector<AlgPoly> gens, const GroebnerOptions& opts) const {
  std::vector<AlgPoly> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  std::size_t steps = 0;

  auto unit = [this] {
    AlgPoly one;
    one.terms.emplace_back(Exponents(nvars(), 0), base_->one());
    return std::vector<AlgPoly>{one};
  };

  auto make_pair = [&](std::size_t i, std::size_t j) {
    Pair p{i, j, lcm(polys[i].lm(), polys[j].lm()), 0};
    const std::uint32_t d = degree(p.lcm);
    p.sugar = std::max(polys[i].sugar + d - degree(polys[i].lm()), polys[j].sugar + d - degree(polys[j].lm()));
    return p;
  };

  // Gebauer-Moeller installation of a new basis element h.
  auto update = [&](std::size_t h) {
    const Exponents& lh = polys[h].lm();
    std::vector<Pair> C;
    for (std::size_t g : active) C.push_back(make_pair(g, h));
    std::vector<Pair> D;
    while (!C.empty()) {
      Pair p = std::move(C.back());
      C.pop_back();
      bool keep = coprime(polys[p.i].lm(), lh);
      if (!keep) {
        keep = true;
        for (const auto* set : {&C, &D})
          for (const Pair& q : *set)
            if (divides(q.lcm, p.lcm)) {
              keep = false;
              break;
            }
      }
      if (keep) D.push_back(std::move(p));
    }
    std::vector<Pair> next;
    for (auto& q : pairs) {
      if (!divides(lh, q.lcm) || lcm(polys[q.i].lm(), lh) == q.lcm || lcm(polys[q.j].lm(), lh) == q.lcm)
        next.push_back(std::move(q));
    }
    for (auto& p : D)
      if (!coprime(polys[p.i].lm(), lh)) next.push_back(std::move(p));
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!divides(lh, polys[g].lm())) still.push_back(g);
    still.push_back(h);
    active = std::move(still);
  };

  auto active_basis = [&] {
    std::vector<AlgPoly> b;
    for (std::size_t g : active) b.push_back(polys[g]);
    return b;
  };
  auto active_ptrs = [&] {
    std::vector<const AlgPoly*> b;
    for (std::size_t g : active) b.push_back(&polys[g]);
    return b;
  };

  for (auto& g : gens) {
    if (g.is_zero()) continue;
    AlgPoly r = monic(reduce(g, active_ptrs(), steps, opts.max_steps));
    if (r.is_zero()) continue;
    if (is_constant(r)) return unit();
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [this](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return order_.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = std::move(*best);
    pairs.erase(best);
    if (++processed > opts.max_pairs) throw Error(ErrorCode::BudgetExceeded, "Groebner pair budget exhausted");

    const AlgPoly& a = polys[p.i];
    const AlgPoly& b = polys[p.j];
    AlgPoly s = sub_multiple(AlgPoly{}, quotient(p.lcm, a.lm()), base_->from_int(-1), a);
    s = sub_multiple(s, quotient(p.lcm, b.lm()), base_->one(), b);
    s.sugar = p.sugar;
    AlgPoly r = monic(reduce(s, active_ptrs(), steps, opts.max_steps));
    if (r.is_zero()) continue;
    if (is_constant(r)) return unit();
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  // Interreduce: the active leading monomials are already minimal.
  std::vector<AlgPoly> basis = active_basis();
  std::sort(basis.begin(), basis.end(),
            [this](const AlgPoly& x, const AlgPoly& y) { return order_.compare(x.lm(), y.lm()) < 0; });
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<const AlgPoly*> others;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(&basis[j]);
    AlgPoly head;
    head.terms.push_back(basis[i].terms.front());
    AlgPoly tail;
    tail.terms.assign(basis[i].terms.begin() + 1, basis[i].terms.end());
    AlgPoly reduced_tail = reduce(tail, others, steps, opts.max_steps);
    head.terms.insert(head.terms.end(), reduced_tail.terms.begin(), reduced_tail.terms.end());
    head.sugar = basis[i].sugar;
    basis[i] = monic(head);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// AlgebraicIdeal

namespace {

std::vector<std::vector<DerivVar>> arrange_blocks(std::vector<std::vector<DerivVar>> blocks,
                                                  const std::vector<DerivVar>& all) {
  std::set<DerivVar> seen;
  for (auto& b : blocks) {
    std::vector<DerivVar> kept;
    for (const auto& v : b)
      if (seen.insert(v).second) kept.push_back(v);
    b = std::move(kept);
  }
  if (blocks.empty()) blocks.emplace_back();
  for (const auto& v : all)
    if (seen.insert(v).second) blocks.back().push_back(v);
  for (auto& b : blocks) std::sort(b.begin(), b.end(), std::greater<>());
  return blocks;
}

MonomialOrder order_for(bool saturated, const std::vector<std::vector<DerivVar>>& blocks) {
  std::vector<std::size_t> sizes;
  if (saturated) sizes.push_back(1);
  for (const auto& b : blocks) sizes.push_back(b.size());
  return MonomialOrder::blocks(sizes);
}

std::vector<DerivVar> collect_variables(const std::vector<DiffPoly>& gens,
                                        const std::optional<DiffPoly>& h,
                                        const std::vector<DerivVar>& extra) {
  std::set<DerivVar> vs(extra.begin(), extra.end());
  for (const auto& g : gens)
    for (const auto& v : g.variables()) vs.insert(v);
  if (h)
    for (const auto& v : h->variables()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

}  // namespace

AlgebraicIdeal::AlgebraicIdeal(DiffRingPtr ring, const std::vector<DiffPoly>& gens,
                               std::vector<std::vector<DerivVar>> blocks,
                               std::optional<DiffPoly> saturate_by,
                               const std::vector<DerivVar>& extra_vars, const GroebnerOptions& opts)
    : ring_(std::move(ring)),
      saturated_(saturate_by.has_value()),
      alg_(ring_->base(), MonomialOrder::grevlex(0)) {
  blocks = arrange_blocks(std::move(blocks), collect_variables(gens, saturate_by, extra_vars));
  alg_ = AlgRing(ring_->base(), order_for(saturated_, blocks));
  for (const auto& b : blocks) {
    block_sizes_.push_back(b.size());
    for (const auto& v : b) {
      index_.emplace(v, vars_.size() + (saturated_ ? 1 : 0));
      vars_.push_back(v);
    }
  }
  std::vector<AlgPoly> alg_gens;
  for (const auto& g : gens) alg_gens.push_back(to_alg(g));
  if (saturated_) {
    // 1 - z H
    AlgPoly h = to_alg(*saturate_by);
    std::vector<std::pair<Exponents, BaseElem>> terms;
    terms.emplace_back(Exponents(alg_.nvars(), 0), ring_->base().one());
    for (const auto& [e, c] : h.terms) {
      Exponents ez = e;
      ez[0] += 1;
      terms.emplace_back(std::move(ez), ring_->base().neg(c));
    }
    alg_gens.push_back(alg_.from_terms(std::move(terms)));
  }
  basis_ = alg_.groebner_basis(std::move(alg_gens), opts);
}

AlgPoly AlgebraicIdeal::to_alg(const DiffPoly& f) const {
  std::vector<std::pair<Exponents, BaseElem>> terms;
  for (const auto& t : f.terms()) {
    Exponents e(alg_.nvars(), 0);
    for (const auto& [v, k] : t.mono.factors()) e[index_.at(v)] = k;
    terms.emplace_back(std::move(e), t.coeff);
  }
  return alg_.from_terms(std::move(terms));
}

DiffPoly AlgebraicIdeal::from_alg(const AlgPoly& p) const {
  std::vector<Term> terms;
  const std::size_t offset = saturated_ ? 1 : 0;
  for (const auto& [e, c] : p.terms) {
    if (saturated_ && e[0] != 0) throw Error(ErrorCode::InvalidArgument, "polynomial involves the auxiliary variable");
    std::vector<Monomial::Factor> fs;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i + offset] > 0) fs.emplace_back(vars_[i], e[i + offset]);
    terms.push_back({Monomial::from_factors(std::move(fs)), c});
  }
  return DiffPoly::from_terms(ring_, std::move(terms));
}

std::map<Monomial, DiffPoly> AlgebraicIdeal::split_foreign(const DiffPoly& f) const {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Factor> known, foreign;
    for (const auto& fac : t.mono.factors()) (index_.count(fac.first) ? known : foreign).push_back(fac);
    groups[Monomial::from_factors(std::move(foreign))].push_back({Monomial::from_factors(std::move(known)), t.coeff});
  }
  std::map<Monomial, DiffPoly> out;
  for (auto& [m, ts] : groups) out.emplace(m, DiffPoly::from_terms(ring_, std::move(ts)));
  return out;
}

bool AlgebraicIdeal::contains(const DiffPoly& f) const {
  for (const auto& [m, c] : split_foreign(f))
    if (!alg_.member(to_alg(c), basis_)) return false;
  return true;
}

DiffPoly AlgebraicIdeal::normal_form(const DiffPoly& f) const {
  DiffPoly out(ring_);
  for (const auto& [m, c] : split_foreign(f))
    out += from_alg(alg_.normal_form(to_alg(c), basis_)).times_monomial(m, ring_->base().one());
  return out;
}

std::vector<DiffPoly> AlgebraicIdeal::basis() const {
  std::vector<DiffPoly> out;
  for (const auto& g : basis_) {
    const bool has_z = saturated_ && std::any_of(g.terms.begin(), g.terms.end(),
                                                 [](const auto& t) { return t.first[0] != 0; });
    if (!has_z) out.push_back(from_alg(g));
  }
  return out;
}

std::vector<DiffPoly> AlgebraicIdeal::eliminate_to(const std::set<DerivVar>& keep) const {
  std::vector<DiffPoly> out;
  for (const auto& g : basis()) {
    const auto vs = g.variables();
    if (std::all_of(vs.begin(), vs.end(), [&](const DerivVar& v) { return keep.count(v) > 0; }))
      out.push_back(g);
  }
  return out;
}

bool AlgebraicIdeal::is_unit() const {
  return basis_.size() == 1 && is_constant(basis_.front());
}

}  // namespace dalg
