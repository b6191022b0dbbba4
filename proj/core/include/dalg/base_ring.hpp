#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "dalg/rational_function.hpp"

namespace dalg {

/// Upper bound on the number m of commuting derivations.
inline constexpr std::uint32_t kMaxDerivations = 8;

enum class BaseKind {
  Rationals,          ///< Q, constant derivations
  PrimeField,         ///< F_p, constant derivations
  RationalFunctions,  ///< Q(t_0..t_{m-1}) or F_p(t_0..t_{m-1}), delta_i = d/dt_i
};

const char* to_string(BaseKind kind);

struct RingSpec {
  BaseKind kind = BaseKind::Rationals;
  std::uint64_t characteristic = 0;
  std::uint32_t num_derivations = 1;

  bool operator==(const RingSpec&) const = default;
};

/// An element of the base differential ring R. Constants of Q and F_p are
/// held as mpq_class (F_p residues in [0, p)); rational functions as RatFunc.
/// Representations are canonical, so operator== decides equality in R.
class BaseElem {
 public:
  BaseElem() = default;
  explicit BaseElem(mpq_class c) : value_(std::move(c)) {}
  explicit BaseElem(RatFunc f) : value_(std::move(f)) {}

  bool is_constant_kind() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& constant() const { return std::get<mpq_class>(value_); }
  const RatFunc& rational_function() const { return std::get<RatFunc>(value_); }

  bool operator==(const BaseElem& o) const { return value_ == o.value_; }

 private:
  std::variant<mpq_class, RatFunc> value_;
};

/// The base differential ring (R, delta_0..delta_{m-1}). Immutable once built;
/// all operations are pure and safe to call concurrently.
class BaseRing {
 public:
  /// Validates the spec: p prime (trial division), 1 <= m <= kMaxDerivations.
  explicit BaseRing(RingSpec spec);

  const RingSpec& spec() const { return spec_; }
  const ConstField& constants() const { return field_; }
  std::uint32_t num_derivations() const { return spec_.num_derivations; }
  std::uint64_t characteristic() const { return spec_.characteristic; }
  bool has_parameters() const { return spec_.kind == BaseKind::RationalFunctions; }

  BaseElem zero() const;
  BaseElem one() const;
  BaseElem from_int(long long v) const;
  BaseElem from_rational(const mpq_class& q) const;
  /// The parameter t_i of a rational-function field.
  BaseElem parameter(std::uint32_t i) const;
  BaseElem from_rational_function(const RatFunc& f) const;

  BaseElem add(const BaseElem& a, const BaseElem& b) const;
  BaseElem sub(const BaseElem& a, const BaseElem& b) const;
  BaseElem mul(const BaseElem& a, const BaseElem& b) const;
  BaseElem neg(const BaseElem& a) const;
  BaseElem inv(const BaseElem& a) const;
  BaseElem div(const BaseElem& a, const BaseElem& b) const { return mul(a, inv(b)); }
  BaseElem pow(const BaseElem& a, std::uint64_t e) const;
  bool is_zero(const BaseElem& a) const;
  bool is_one(const BaseElem& a) const;
  bool equal(const BaseElem& a, const BaseElem& b) const;

  /// delta_i(a): zero on constant fields, d/dt_i on rational functions.
  BaseElem derive(std::uint32_t i, const BaseElem& a) const;

  /// Whether `a` is a canonical element of this ring.
  bool contains(const BaseElem& a) const;

  bool operator==(const BaseRing& o) const { return spec_ == o.spec_; }

 private:
  void check(const BaseElem& a) const;

  RingSpec spec_;
  ConstField field_;
};

}  // namespace dalg
