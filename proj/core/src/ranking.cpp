#include "dalg/ranking.hpp"

#include <algorithm>

#include "dalg/error.hpp"

namespace dalg {

std::vector<std::uint64_t> Rank::tuple() const {
  std::vector<std::uint64_t> t{order, var};
  t.insert(t.end(), reversed_exponents.begin(), reversed_exponents.end());
  t.push_back(power);
  return t;
}

std::strong_ordering Rank::operator<=>(const Rank& o) const {
  if (auto c = order <=> o.order; c != 0) return c;
  if (auto c = var <=> o.var; c != 0) return c;
  const std::size_t n = std::min(reversed_exponents.size(), o.reversed_exponents.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = reversed_exponents[i] <=> o.reversed_exponents[i]; c != 0) return c;
  if (auto c = reversed_exponents.size() <=> o.reversed_exponents.size(); c != 0) return c;
  return power <=> o.power;
}

Rank rank_of_power(const DerivVar& v, std::uint32_t p, std::uint32_t m) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "rank of a zeroth power");
  Rank r;
  r.order = v.order();
  r.var = v.var;
  for (std::uint32_t i = m; i-- > 0;) r.reversed_exponents.push_back(v.op[i]);
  r.power = p;
  return r;
}

DerivVar leader(const DiffPoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ElementOfBaseRing, "polynomial lies in the base ring");
  // Terms are lex-sorted with the highest-ranked variable first.
  return f.terms().front().mono.factors().front().first;
}

Rank rank_of_poly(const DiffPoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ElementOfBaseRing, "polynomial lies in the base ring");
  const auto& top = f.terms().front().mono.factors().front();
  return rank_of_power(top.first, top.second, f.ring().m());
}

DiffPoly initial(const DiffPoly& f) {
  const DerivVar u = leader(f);
  return f.coefficient(u, f.terms().front().mono.factors().front().second);
}

DiffPoly separant(const DiffPoly& f) {
  const DerivVar u = leader(f);
  const BaseRing& R = f.base();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const std::uint32_t k = t.mono.degree_in(u);
    if (k == 0) continue;
    BaseElem c = R.mul(t.coeff, R.from_int(k));
    if (R.is_zero(c)) continue;
    std::vector<Monomial::Factor> fs;
    for (const auto& fac : t.mono.factors())
      fs.emplace_back(fac.first, fac.first == u ? fac.second - 1 : fac.second);
    out.push_back({Monomial::from_factors(std::move(fs)), std::move(c)});
  }
  return DiffPoly::from_terms(f.ring_ptr(), std::move(out));
}

bool is_partially_reduced(const DiffPoly& f, const DiffPoly& g) {
  const DerivVar u = leader(g);
  for (const auto& v : f.variables())
    if (is_proper_derivative(v, u)) return false;
  return true;
}

bool is_reduced(const DiffPoly& f, const DiffPoly& g) {
  if (!is_partially_reduced(f, g)) return false;
  const DerivVar u = leader(g);
  return f.degree_in(u) < g.degree_in(u);
}

bool is_partially_reduced(const DiffPoly& f, const std::vector<DiffPoly>& G) {
  return std::all_of(G.begin(), G.end(), [&](const DiffPoly& g) { return is_partially_reduced(f, g); });
}

bool is_reduced(const DiffPoly& f, const std::vector<DiffPoly>& G) {
  return std::all_of(G.begin(), G.end(), [&](const DiffPoly& g) { return is_reduced(f, g); });
}

bool is_autoreduced(const std::vector<DiffPoly>& G) {
  for (const auto& g : G)
    if (g.is_constant()) return false;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j)
      if (i != j && !is_reduced(G[i], G[j])) return false;
  return true;
}

std::strong_ordering AutoRank::operator<=>(const AutoRank& o) const {
  const std::size_t n = std::min(prefix_.size(), o.prefix_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = prefix_[i] <=> o.prefix_[i]; c != 0) return c;
  // The shorter sequence continues with infinity, which exceeds every rank.
  return o.prefix_.size() <=> prefix_.size();
}

AutoreducedSet::AutoreducedSet(std::vector<DiffPoly> elements) {
  if (!is_autoreduced(elements)) throw Error(ErrorCode::NotAutoreduced, "set is not autoreduced");
  std::sort(elements.begin(), elements.end(),
            [](const DiffPoly& a, const DiffPoly& b) { return rank_of_poly(a) < rank_of_poly(b); });
  elements_ = std::move(elements);
  for (const auto& g : elements_) {
    leaders_.push_back(dalg::leader(g));
    initials_.push_back(dalg::initial(g));
    separants_.push_back(dalg::separant(g));
  }
}

AutoRank AutoreducedSet::rank() const {
  std::vector<Rank> ranks;
  for (const auto& g : elements_) ranks.push_back(rank_of_poly(g));
  return AutoRank(std::move(ranks));
}

AutoRank auto_rank(const AutoreducedSet& G) { return G.rank(); }

std::strong_ordering compare_auto(const AutoreducedSet& a, const AutoreducedSet& b) {
  return a.rank() <=> b.rank();
}

DiffPoly H_of(const AutoreducedSet& G, const DiffRingPtr& ring) {
  DiffPoly h = DiffPoly::integer(ring, 1);
  for (std::size_t i = 0; i < G.size(); ++i) h = h * G.initial(i) * G.separant(i);
  return h;
}

DiffPoly h_element(const AutoreducedSet& G, const HExponents& exps, const DiffRingPtr& ring) {
  if (exps.size() != G.size())
    throw Error(ErrorCode::InvalidArgument, "H exponent table does not match the set");
  DiffPoly h = DiffPoly::integer(ring, 1);
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto [ni, mi] = exps[i];
    if (mi > 0 && G.separant(i).is_zero())
      throw ZeroSeparantError(i, "power of a zero separant requested");
    if (ni > 0) h = h * G.initial(i).pow(ni);
    if (mi > 0) h = h * G.separant(i).pow(mi);
  }
  return h;
}

}  // namespace dalg
