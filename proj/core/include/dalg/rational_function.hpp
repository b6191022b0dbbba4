#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace dalg {

// Q (characteristic 0) or F_p. Elements of F_p are mpq integers in [0, p).
class ConstField {
 public:
  ConstField() = default;
  explicit ConstField(std::uint64_t characteristic);

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_prime_field() const { return characteristic_ != 0; }

  mpq_class normalize(const mpq_class& a) const;
  mpq_class from_int(long long v) const { return normalize(mpq_class(static_cast<long>(v))); }

  mpq_class add(const mpq_class& a, const mpq_class& b) const {
    if (!is_prime_field()) return a + b;
    return reduce_integer(a.get_num() + b.get_num());
  }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const {
    if (!is_prime_field()) return a - b;
    return reduce_integer(a.get_num() - b.get_num());
  }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const {
    if (!is_prime_field()) return a * b;
    return reduce_integer(a.get_num() * b.get_num());
  }
  mpq_class neg(const mpq_class& a) const {
    if (!is_prime_field()) return -a;
    return reduce_integer(-a.get_num());
  }
  mpq_class inv(const mpq_class& a) const;

  bool operator==(const ConstField& o) const { return characteristic_ == o.characteristic_; }

 private:
  mpq_class reduce_integer(const mpz_class& v) const;

  std::uint64_t characteristic_ = 0;
  mpz_class modulus_;
};

bool is_prime(std::uint64_t p);

// Exponent vector over the parameters t_0..t_{m-1}.
using TExponents = std::vector<std::uint32_t>;

// Sparse polynomial in t_0..t_{m-1} over a ConstField. Terms are kept in
// descending lexicographic order (t_0 > t_1 > ...). Coefficients are nonzero.
class TPoly {
 public:
  using TermMap = std::map<TExponents, mpq_class, std::greater<>>;

  TPoly() = default;
  explicit TPoly(std::size_t nvars) : nvars_(nvars) {}
  static TPoly constant(std::size_t nvars, const mpq_class& c);
  static TPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Leading coefficient under the lex order.
  const mpq_class& leading_coeff() const { return terms_.begin()->second; }
  std::uint32_t degree_in(std::size_t var) const;

  void add_term(const ConstField& F, const TExponents& e, const mpq_class& c);

  bool operator==(const TPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

TPoly add(const ConstField& F, const TPoly& a, const TPoly& b);
TPoly sub(const ConstField& F, const TPoly& a, const TPoly& b);
TPoly mul(const ConstField& F, const TPoly& a, const TPoly& b);
TPoly scale(const ConstField& F, const TPoly& a, const mpq_class& c);
TPoly neg(const ConstField& F, const TPoly& a);
TPoly partial_derivative(const ConstField& F, const TPoly& a, std::size_t var);
// Exact quotient a / b; b must divide a.
TPoly exact_div(const ConstField& F, const TPoly& a, const TPoly& b);
// Monic greatest common divisor (0 only if both are 0).
TPoly gcd(const ConstField& F, const TPoly& a, const TPoly& b);

// Element of F(t_0..t_{m-1}): num/den with gcd(num, den) = 1 and den monic
// under the lex order. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(std::size_t nvars);
  RatFunc(const ConstField& F, TPoly num, TPoly den);

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const RatFunc& o) const = default;

 private:
  TPoly num_;
  TPoly den_;
};

RatFunc add(const ConstField& F, const RatFunc& a, const RatFunc& b);
RatFunc sub(const ConstField& F, const RatFunc& a, const RatFunc& b);
RatFunc mul(const ConstField& F, const RatFunc& a, const RatFunc& b);
RatFunc neg(const ConstField& F, const RatFunc& a);
RatFunc inv(const ConstField& F, const RatFunc& a);
RatFunc partial_derivative(const ConstField& F, const RatFunc& a, std::size_t var);

}  // namespace dalg
