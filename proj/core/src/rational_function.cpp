#include "dalg/rational_function.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "dalg/error.hpp"

namespace dalg {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

ConstField::ConstField(std::uint64_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0) {
    if (!is_prime(characteristic))
      throw Error(ErrorCode::InvalidRing,
                  "characteristic " + std::to_string(characteristic) + " is not prime");
    modulus_ = mpz_class(static_cast<unsigned long>(characteristic));
  }
}

mpq_class ConstField::reduce_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return mpq_class(r);
}

mpq_class ConstField::normalize(const mpq_class& a) const {
  if (!is_prime_field()) {
    mpq_class c = a;
    c.canonicalize();
    return c;
  }
  mpz_class den;
  mpz_fdiv_r(den.get_mpz_t(), a.get_den_mpz_t(), modulus_.get_mpz_t());
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo p");
  mpz_class inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  return reduce_integer(a.get_num() * inv_den);
}

mpq_class ConstField::inv(const mpq_class& a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!is_prime_field()) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
  return mpq_class(r);
}

// ---------------------------------------------------------------------------
// TPoly

TPoly TPoly::constant(std::size_t nvars, const mpq_class& c) {
  TPoly p(nvars);
  if (c != 0) p.terms_.emplace(TExponents(nvars, 0), c);
  return p;
}

TPoly TPoly::variable(std::size_t nvars, std::size_t index) {
  TPoly p(nvars);
  TExponents e(nvars, 0);
  e.at(index) = 1;
  p.terms_.emplace(std::move(e), mpq_class(1));
  return p;
}

bool TPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint32_t TPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void TPoly::add_term(const ConstField& F, const TExponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = F.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

TPoly add(const ConstField& F, const TPoly& a, const TPoly& b) {
  TPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(F, e, c);
  return r;
}

TPoly neg(const ConstField& F, const TPoly& a) {
  TPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) r.add_term(F, e, F.neg(c));
  return r;
}

TPoly sub(const ConstField& F, const TPoly& a, const TPoly& b) {
  TPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(F, e, F.neg(c));
  return r;
}

namespace {

TExponents add_exponents(const TExponents& a, const TExponents& b) {
  TExponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Coefficients of `a` viewed as a univariate polynomial in `var`.
std::map<std::uint32_t, TPoly> coefficients_in(const ConstField& F, const TPoly& a,
                                               std::size_t var) {
  std::map<std::uint32_t, TPoly> out;
  for (const auto& [e, c] : a.terms()) {
    TExponents rest = e;
    rest[var] = 0;
    auto [it, _] = out.try_emplace(e[var], TPoly(a.nvars()));
    it->second.add_term(F, rest, c);
  }
  return out;
}

TPoly times_power(const ConstField& F, const TPoly& a, std::size_t var, std::uint32_t k) {
  if (k == 0) return a;
  TPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    TExponents f = e;
    f[var] += k;
    r.add_term(F, f, c);
  }
  return r;
}

TPoly leading_coeff_in(const ConstField& F, const TPoly& a, std::size_t var) {
  auto coeffs = coefficients_in(F, a, var);
  return coeffs.rbegin()->second;
}

TPoly pseudo_remainder(const ConstField& F, const TPoly& a, const TPoly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const TPoly lb = leading_coeff_in(F, b, var);
  TPoly r = a;
  while (!r.is_zero()) {
    const std::uint32_t dr = r.degree_in(var);
    if (dr < db) break;
    const TPoly lr = leading_coeff_in(F, r, var);
    r = sub(F, mul(F, lb, r), times_power(F, mul(F, lr, b), var, dr - db));
  }
  return r;
}

std::optional<std::size_t> first_variable(const TPoly& a, const TPoly& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return std::nullopt;
}

TPoly gcd_nonzero(const ConstField& F, const TPoly& a, const TPoly& b);

TPoly content_in(const ConstField& F, const TPoly& a, std::size_t var) {
  TPoly g;
  bool first = true;
  for (const auto& [d, c] : coefficients_in(F, a, var)) {
    g = first ? c : gcd_nonzero(F, g, c);
    first = false;
    if (g.is_constant()) break;
  }
  return g;
}

// gcd up to a nonzero constant factor; a, b nonzero.
TPoly gcd_nonzero(const ConstField& F, const TPoly& a, const TPoly& b) {
  const std::size_t n = a.nvars();
  auto var = first_variable(a, b);
  if (!var) return TPoly::constant(n, 1);
  const std::size_t x = *var;
  if (a.degree_in(x) == 0) return gcd_nonzero(F, a, content_in(F, b, x));
  if (b.degree_in(x) == 0) return gcd_nonzero(F, content_in(F, a, x), b);

  const TPoly ca = content_in(F, a, x);
  const TPoly cb = content_in(F, b, x);
  const TPoly c = gcd_nonzero(F, ca, cb);
  TPoly pa = exact_div(F, a, ca);
  TPoly pb = exact_div(F, b, cb);
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    TPoly r = pseudo_remainder(F, pa, pb, x);
    pa = std::move(pb);
    pb = r.is_zero() ? TPoly(n) : exact_div(F, r, content_in(F, r, x));
  }
  if (pa.degree_in(x) == 0) return c;
  return mul(F, c, pa);
}

TPoly make_monic(const ConstField& F, const TPoly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.leading_coeff()));
}

}  // namespace

TPoly mul(const ConstField& F, const TPoly& a, const TPoly& b) {
  TPoly r(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(F, add_exponents(ea, eb), F.mul(ca, cb));
  return r;
}

TPoly scale(const ConstField& F, const TPoly& a, const mpq_class& c) {
  TPoly r(a.nvars());
  if (c == 0) return r;
  for (const auto& [e, x] : a.terms()) r.add_term(F, e, F.mul(x, c));
  return r;
}

TPoly partial_derivative(const ConstField& F, const TPoly& a, std::size_t var) {
  TPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    if (e[var] == 0) continue;
    TExponents f = e;
    f[var] -= 1;
    r.add_term(F, f, F.mul(c, F.from_int(e[var])));
  }
  return r;
}

TPoly exact_div(const ConstField& F, const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  TPoly q(a.nvars());
  TPoly r = a;
  const auto& [lb_exp, lb_coeff] = *b.terms().begin();
  const mpq_class lb_inv = F.inv(lb_coeff);
  while (!r.is_zero()) {
    const auto& [lr_exp, lr_coeff] = *r.terms().begin();
    TExponents e(lr_exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (lr_exp[i] < lb_exp[i])
        throw Error(ErrorCode::InvalidArgument, "exact_div: divisor does not divide dividend");
      e[i] = lr_exp[i] - lb_exp[i];
    }
    TPoly t(a.nvars());
    t.add_term(F, e, F.mul(lr_coeff, lb_inv));
    q = add(F, q, t);
    r = sub(F, r, mul(F, t, b));
  }
  return q;
}

TPoly gcd(const ConstField& F, const TPoly& a, const TPoly& b) {
  if (a.is_zero()) return make_monic(F, b);
  if (b.is_zero()) return make_monic(F, a);
  return make_monic(F, gcd_nonzero(F, a, b));
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(std::size_t nvars) : num_(nvars), den_(TPoly::constant(nvars, 1)) {}

RatFunc::RatFunc(const ConstField& F, TPoly num, TPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  const std::size_t n = den.nvars();
  if (num.is_zero()) {
    num_ = TPoly(n);
    den_ = TPoly::constant(n, 1);
    return;
  }
  const TPoly g = gcd(F, num, den);
  num = exact_div(F, num, g);
  den = exact_div(F, den, g);
  const mpq_class lc_inv = F.inv(den.leading_coeff());
  num_ = scale(F, num, lc_inv);
  den_ = scale(F, den, lc_inv);
}

RatFunc add(const ConstField& F, const RatFunc& a, const RatFunc& b) {
  if (a.den() == b.den()) return RatFunc(F, add(F, a.num(), b.num()), a.den());
  return RatFunc(F, add(F, mul(F, a.num(), b.den()), mul(F, b.num(), a.den())),
                 mul(F, a.den(), b.den()));
}

RatFunc sub(const ConstField& F, const RatFunc& a, const RatFunc& b) {
  return add(F, a, neg(F, b));
}

RatFunc mul(const ConstField& F, const RatFunc& a, const RatFunc& b) {
  return RatFunc(F, mul(F, a.num(), b.num()), mul(F, a.den(), b.den()));
}

RatFunc neg(const ConstField& F, const RatFunc& a) {
  return RatFunc(F, neg(F, a.num()), a.den());
}

RatFunc inv(const ConstField& F, const RatFunc& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RatFunc(F, a.den(), a.num());
}

RatFunc partial_derivative(const ConstField& F, const RatFunc& a, std::size_t var) {
  const TPoly dn = partial_derivative(F, a.num(), var);
  const TPoly dd = partial_derivative(F, a.den(), var);
  if (dd.is_zero()) return RatFunc(F, dn, a.den());
  return RatFunc(F, sub(F, mul(F, dn, a.den()), mul(F, a.num(), dd)), mul(F, a.den(), a.den()));
}

}  // namespace dalg
