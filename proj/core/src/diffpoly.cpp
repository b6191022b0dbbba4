#include "dalg/diffpoly.hpp"

#include <algorithm>
#include <string>

#include "dalg/error.hpp"

namespace dalg {

// ---------------------------------------------------------------------------
// DerivOp

DerivOp DerivOp::single(std::uint32_t i, std::uint32_t times) {
  if (i >= kMaxDerivations) throw Error(ErrorCode::IndexOutOfRange, "derivation index");
  DerivOp d;
  d.alpha_[i] = static_cast<std::uint16_t>(times);
  d.order_ = times;
  return d;
}

DerivOp DerivOp::from_exponents(const std::vector<std::uint32_t>& alpha) {
  if (alpha.size() > kMaxDerivations)
    throw Error(ErrorCode::IndexOutOfRange, "too many derivation exponents");
  DerivOp d;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    d.alpha_[i] = static_cast<std::uint16_t>(alpha[i]);
    d.order_ += alpha[i];
  }
  return d;
}

std::vector<std::uint32_t> DerivOp::exponents(std::uint32_t m) const {
  return {alpha_.begin(), alpha_.begin() + m};
}

DerivOp DerivOp::operator+(const DerivOp& o) const {
  DerivOp d;
  for (std::size_t i = 0; i < kMaxDerivations; ++i)
    d.alpha_[i] = static_cast<std::uint16_t>(alpha_[i] + o.alpha_[i]);
  d.order_ = order_ + o.order_;
  return d;
}

bool DerivOp::divides(const DerivOp& o) const {
  for (std::size_t i = 0; i < kMaxDerivations; ++i)
    if (alpha_[i] > o.alpha_[i]) return false;
  return true;
}

DerivOp DerivOp::quotient_of(const DerivOp& o) const {
  DerivOp d;
  for (std::size_t i = 0; i < kMaxDerivations; ++i) {
    d.alpha_[i] = static_cast<std::uint16_t>(o.alpha_[i] - alpha_[i]);
    d.order_ += d.alpha_[i];
  }
  return d;
}

DerivOp DerivOp::lcm(const DerivOp& o) const {
  DerivOp d;
  for (std::size_t i = 0; i < kMaxDerivations; ++i) {
    d.alpha_[i] = std::max(alpha_[i], o.alpha_[i]);
    d.order_ += d.alpha_[i];
  }
  return d;
}

std::strong_ordering DerivOp::operator<=>(const DerivOp& o) const {
  if (auto c = order_ <=> o.order_; c != 0) return c;
  for (std::size_t i = kMaxDerivations; i-- > 0;)
    if (auto c = alpha_[i] <=> o.alpha_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering DerivVar::operator<=>(const DerivVar& o) const {
  if (auto c = op.order() <=> o.op.order(); c != 0) return c;
  if (auto c = var <=> o.var; c != 0) return c;
  return op <=> o.op;
}

bool is_derivative(const DerivVar& v, const DerivVar& w) {
  return v.var == w.var && w.op.divides(v.op);
}

bool is_proper_derivative(const DerivVar& v, const DerivVar& w) {
  return is_derivative(v, w) && !(v.op == w.op);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const DerivVar& v, std::uint32_t e) {
  if (e > 0) factors_.emplace_back(v, e);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first > b.first; });
  Monomial m;
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == f.first)
      m.factors_.back().second += f.second;
    else
      m.factors_.push_back(f);
  }
  return m;
}

std::uint32_t Monomial::degree_in(const DerivVar& v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::without(const DerivVar& v) const {
  Monomial m;
  for (const auto& f : factors_)
    if (!(f.first == v)) m.factors_.push_back(f);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first == b->first) {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    } else if (a->first > b->first) {
      m.factors_.push_back(*a++);
    } else {
      m.factors_.push_back(*b++);
    }
  }
  m.factors_.insert(m.factors_.end(), a, factors_.end());
  m.factors_.insert(m.factors_.end(), b, o.factors_.end());
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  const std::size_t n = std::min(factors_.size(), o.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = factors_[i].first <=> o.factors_[i].first; c != 0) return c;
    if (auto c = factors_[i].second <=> o.factors_[i].second; c != 0) return c;
  }
  return factors_.size() <=> o.factors_.size();
}

// ---------------------------------------------------------------------------
// DiffRing

DiffRing::DiffRing(RingSpec spec, std::uint32_t n) : base_(spec), n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidRing, "need at least one differential indeterminate");
}

DiffRingPtr make_ring(RingSpec spec, std::uint32_t n) {
  return std::make_shared<const DiffRing>(spec, n);
}

// ---------------------------------------------------------------------------
// DiffPoly

namespace {

void check_variable(const DiffRing& ring, const DerivVar& v) {
  if (v.var >= ring.n())
    throw Error(ErrorCode::IndexOutOfRange, "indeterminate index y" + std::to_string(v.var));
  for (std::uint32_t i = ring.m(); i < kMaxDerivations; ++i)
    if (v.op[i] != 0) throw Error(ErrorCode::IndexOutOfRange, "derivation index d" + std::to_string(i));
}

std::strong_ordering compare_rational(const mpq_class& a, const mpq_class& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare_tpoly(const TPoly& a, const TPoly& b) {
  auto x = a.terms().begin();
  auto y = b.terms().begin();
  for (; x != a.terms().end() && y != b.terms().end(); ++x, ++y) {
    if (x->first != y->first) return x->first > y->first ? std::strong_ordering::greater
                                                         : std::strong_ordering::less;
    if (auto c = compare_rational(x->second, y->second); c != 0) return c;
  }
  return a.terms().size() <=> b.terms().size();
}

std::strong_ordering compare_coeff(const BaseElem& a, const BaseElem& b) {
  if (a.is_constant_kind()) return compare_rational(a.constant(), b.constant());
  if (auto c = compare_tpoly(a.rational_function().num(), b.rational_function().num()); c != 0)
    return c;
  return compare_tpoly(a.rational_function().den(), b.rational_function().den());
}

}  // namespace

DiffPoly DiffPoly::constant(DiffRingPtr ring, const BaseElem& c) {
  DiffPoly p(std::move(ring));
  if (!p.base().contains(c)) throw Error(ErrorCode::RingMismatch, "constant not in base ring");
  if (!p.base().is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

DiffPoly DiffPoly::integer(DiffRingPtr ring, long long c) {
  const BaseElem v = ring->base().from_int(c);
  return constant(std::move(ring), v);
}

DiffPoly DiffPoly::variable(DiffRingPtr ring, const DerivVar& v, std::uint32_t e) {
  check_variable(*ring, v);
  DiffPoly p(std::move(ring));
  p.terms_.push_back({Monomial(v, e), p.base().one()});
  return p;
}

std::vector<Term> DiffPoly::combine(const BaseRing& R, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = R.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && R.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && R.is_zero(out.back().coeff)) out.pop_back();
  return out;
}

DiffPoly DiffPoly::from_terms(DiffRingPtr ring, std::vector<Term> terms) {
  DiffPoly p(std::move(ring));
  for (const auto& t : terms)
    for (const auto& [v, e] : t.mono.factors()) check_variable(p.ring(), v);
  p.terms_ = combine(p.base(), std::move(terms));
  return p;
}

void DiffPoly::check_same_ring(const DiffPoly& o) const {
  if (!ring_ || !o.ring_) throw Error(ErrorCode::RingMismatch, "polynomial without a ring");
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw Error(ErrorCode::RingMismatch, "polynomials from different rings");
}

BaseElem DiffPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant");
  return terms_.empty() ? base().zero() : terms_.front().coeff;
}

std::uint32_t DiffPoly::degree_in(const DerivVar& v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

std::vector<DerivVar> DiffPoly::variables() const {
  std::vector<DerivVar> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.push_back(f.first);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::uint32_t DiffPoly::max_order() const {
  std::uint32_t k = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) k = std::max(k, f.first.order());
  return k;
}

std::size_t DiffPoly::total_degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max<std::size_t>(d, t.mono.total_degree());
  return d;
}

DiffPoly DiffPoly::coefficient(const DerivVar& v, std::uint32_t k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.degree_in(v) == k) out.push_back({t.mono.without(v), t.coeff});
  DiffPoly p(ring_);
  p.terms_ = combine(base(), std::move(out));
  return p;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, base().neg(t.coeff)});
  return p;
}

namespace {

template <class Op>
std::vector<Term> merge_terms(const BaseRing& R, const std::vector<Term>& a,
                              const std::vector<Term>& b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->mono > y->mono)) {
      out.push_back(*x++);
    } else if (x == a.end() || y->mono > x->mono) {
      out.push_back({y->mono, op(R.zero(), y->coeff)});
      ++y;
    } else {
      BaseElem c = op(x->coeff, y->coeff);
      if (!R.is_zero(c)) out.push_back({x->mono, std::move(c)});
      ++x;
      ++y;
    }
  }
  return out;
}

}  // namespace

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  check_same_ring(o);
  const BaseRing& R = base();
  terms_ = merge_terms(R, terms_, o.terms_,
                       [&R](const BaseElem& a, const BaseElem& b) { return R.add(a, b); });
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  check_same_ring(o);
  const BaseRing& R = base();
  terms_ = merge_terms(R, terms_, o.terms_,
                       [&R](const BaseElem& a, const BaseElem& b) { return R.sub(a, b); });
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  a.check_same_ring(b);
  const BaseRing& R = a.base();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, R.mul(x.coeff, y.coeff)});
  DiffPoly p(a.ring_);
  p.terms_ = DiffPoly::combine(R, std::move(prod));
  return p;
}

DiffPoly DiffPoly::scaled(const BaseElem& c) const {
  DiffPoly p(ring_);
  if (base().is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  // A field has no zero divisors, so no coefficient vanishes.
  for (const auto& t : terms_) p.terms_.push_back({t.mono, base().mul(t.coeff, c)});
  return p;
}

DiffPoly DiffPoly::times_monomial(const Monomial& m, const BaseElem& c) const {
  DiffPoly p(ring_);
  if (base().is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, base().mul(t.coeff, c)});
  return p;
}

DiffPoly DiffPoly::pow(std::uint32_t e) const {
  DiffPoly result = integer(ring_, 1);
  DiffPoly b = *this;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

DiffPoly DiffPoly::derive(std::uint32_t i) const {
  if (i >= ring_->m())
    throw Error(ErrorCode::IndexOutOfRange, "derivation index " + std::to_string(i));
  const BaseRing& R = base();
  const DerivOp step = DerivOp::single(i);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (R.has_parameters()) {
      BaseElem dc = R.derive(i, t.coeff);
      if (!R.is_zero(dc)) out.push_back({t.mono, std::move(dc)});
    }
    for (const auto& [v, e] : t.mono.factors()) {
      BaseElem c = R.mul(t.coeff, R.from_int(e));
      if (R.is_zero(c)) continue;
      std::vector<Monomial::Factor> fs = t.mono.factors();
      for (auto& f : fs)
        if (f.first == v) f.second -= 1;
      fs.emplace_back(v.derived(step), 1);
      out.push_back({Monomial::from_factors(std::move(fs)), std::move(c)});
    }
  }
  DiffPoly p(ring_);
  p.terms_ = combine(R, std::move(out));
  return p;
}

DiffPoly DiffPoly::derive(const DerivOp& theta) const {
  DiffPoly p = *this;
  for (std::uint32_t i = 0; i < kMaxDerivations; ++i)
    for (std::uint32_t k = 0; k < theta[i]; ++k) p = p.derive(i);
  return p;
}

DiffPoly DiffPoly::substitute(const std::map<DerivVar, DiffPoly>& sigma) const {
  for (const auto& [v, image] : sigma) check_same_ring(image);
  if (sigma.empty()) return *this;
  std::map<std::pair<DerivVar, std::uint32_t>, DiffPoly> powers;
  auto power_of = [&](const DerivVar& v, std::uint32_t e) -> const DiffPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, sigma.at(v).pow(e)).first;
    return it->second;
  };
  DiffPoly result(ring_);
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> kept;
    std::vector<const DiffPoly*> images;
    for (const auto& [v, e] : t.mono.factors()) {
      if (sigma.count(v))
        images.push_back(&power_of(v, e));
      else
        kept.emplace_back(v, e);
    }
    DiffPoly term(ring_);
    term.terms_.push_back({Monomial::from_factors(std::move(kept)), t.coeff});
    for (const DiffPoly* img : images) term = term * *img;
    result += term;
  }
  return result;
}

bool DiffPoly::operator==(const DiffPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  check_same_ring(o);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff))
      return false;
  return true;
}

std::strong_ordering DiffPoly::compare(const DiffPoly& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].mono <=> o.terms_[i].mono; c != 0) return c;
    if (auto c = compare_coeff(terms_[i].coeff, o.terms_[i].coeff); c != 0) return c;
  }
  return terms_.size() <=> o.terms_.size();
}

}  // namespace dalg
