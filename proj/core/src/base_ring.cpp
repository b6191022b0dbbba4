#include "dalg/base_ring.hpp"

#include "dalg/error.hpp"

namespace dalg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::ElementOfBaseRing: return "ElementOfBaseRing";
    case ErrorCode::NotAutoreduced: return "NotAutoreduced";
    case ErrorCode::ZeroSeparant: return "ZeroSeparant";
    case ErrorCode::ZeroSeparantInCharset: return "ZeroSeparantInCharset";
    case ErrorCode::ExtrasNotPartiallyReduced: return "ExtrasNotPartiallyReduced";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::Rationals: return "rationals";
    case BaseKind::PrimeField: return "prime-field";
    case BaseKind::RationalFunctions: return "rational-functions";
  }
  return "unknown";
}

namespace {

RingSpec validated(RingSpec spec) {
  if (spec.num_derivations < 1 || spec.num_derivations > kMaxDerivations)
    throw Error(ErrorCode::InvalidRing, "number of derivations must be in [1, " +
                                            std::to_string(kMaxDerivations) + "]");
  switch (spec.kind) {
    case BaseKind::Rationals:
      if (spec.characteristic != 0)
        throw Error(ErrorCode::InvalidRing, "rationals have characteristic 0");
      break;
    case BaseKind::PrimeField:
      if (!is_prime(spec.characteristic))
        throw Error(ErrorCode::InvalidRing,
                    "prime field needs a prime characteristic, got " +
                        std::to_string(spec.characteristic));
      break;
    case BaseKind::RationalFunctions:
      if (spec.characteristic != 0 && !is_prime(spec.characteristic))
        throw Error(ErrorCode::InvalidRing, "characteristic must be 0 or prime");
      break;
  }
  return spec;
}

}  // namespace

BaseRing::BaseRing(RingSpec spec) : spec_(validated(spec)), field_(spec_.characteristic) {}

void BaseRing::check(const BaseElem& a) const {
  if (a.is_constant_kind() == has_parameters())
    throw Error(ErrorCode::RingMismatch, "element does not belong to this base ring");
}

bool BaseRing::contains(const BaseElem& a) const {
  if (a.is_constant_kind()) {
    if (has_parameters()) return false;
    return field_.normalize(a.constant()) == a.constant();
  }
  if (!has_parameters()) return false;
  return a.rational_function().nvars() == spec_.num_derivations;
}

BaseElem BaseRing::zero() const { return from_int(0); }
BaseElem BaseRing::one() const { return from_int(1); }
BaseElem BaseRing::from_int(long long v) const { return from_rational(mpq_class(static_cast<long>(v))); }

BaseElem BaseRing::from_rational(const mpq_class& q) const {
  const mpq_class c = field_.normalize(q);
  if (!has_parameters()) return BaseElem(c);
  const std::size_t n = spec_.num_derivations;
  return BaseElem(RatFunc(field_, TPoly::constant(n, c), TPoly::constant(n, 1)));
}

BaseElem BaseRing::parameter(std::uint32_t i) const {
  if (!has_parameters())
    throw Error(ErrorCode::RingMismatch, "constant base ring has no parameters");
  if (i >= spec_.num_derivations)
    throw Error(ErrorCode::IndexOutOfRange, "parameter index t" + std::to_string(i));
  const std::size_t n = spec_.num_derivations;
  return BaseElem(RatFunc(field_, TPoly::variable(n, i), TPoly::constant(n, 1)));
}

BaseElem BaseRing::from_rational_function(const RatFunc& f) const {
  if (!has_parameters() || f.nvars() != spec_.num_derivations)
    throw Error(ErrorCode::RingMismatch, "rational function does not belong to this ring");
  return BaseElem(f);
}

BaseElem BaseRing::add(const BaseElem& a, const BaseElem& b) const {
  check(a);
  check(b);
  if (!has_parameters()) return BaseElem(field_.add(a.constant(), b.constant()));
  return BaseElem(dalg::add(field_, a.rational_function(), b.rational_function()));
}

BaseElem BaseRing::sub(const BaseElem& a, const BaseElem& b) const {
  check(a);
  check(b);
  if (!has_parameters()) return BaseElem(field_.sub(a.constant(), b.constant()));
  return BaseElem(dalg::sub(field_, a.rational_function(), b.rational_function()));
}

BaseElem BaseRing::mul(const BaseElem& a, const BaseElem& b) const {
  check(a);
  check(b);
  if (!has_parameters()) return BaseElem(field_.mul(a.constant(), b.constant()));
  return BaseElem(dalg::mul(field_, a.rational_function(), b.rational_function()));
}

BaseElem BaseRing::neg(const BaseElem& a) const {
  check(a);
  if (!has_parameters()) return BaseElem(field_.neg(a.constant()));
  return BaseElem(dalg::neg(field_, a.rational_function()));
}

BaseElem BaseRing::inv(const BaseElem& a) const {
  check(a);
  if (!has_parameters()) return BaseElem(field_.inv(a.constant()));
  return BaseElem(dalg::inv(field_, a.rational_function()));
}

BaseElem BaseRing::pow(const BaseElem& a, std::uint64_t e) const {
  BaseElem result = one();
  BaseElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool BaseRing::is_zero(const BaseElem& a) const {
  check(a);
  if (!has_parameters()) return a.constant() == 0;
  return a.rational_function().is_zero();
}

bool BaseRing::is_one(const BaseElem& a) const { return equal(a, one()); }

bool BaseRing::equal(const BaseElem& a, const BaseElem& b) const {
  check(a);
  check(b);
  return a == b;
}

BaseElem BaseRing::derive(std::uint32_t i, const BaseElem& a) const {
  if (i >= spec_.num_derivations)
    throw Error(ErrorCode::IndexOutOfRange, "derivation index " + std::to_string(i));
  check(a);
  if (!has_parameters()) return zero();
  return BaseElem(partial_derivative(field_, a.rational_function(), i));
}

}  // namespace dalg
