#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dalg/diffpoly.hpp"
#include "dalg/ranking.hpp"

namespace dalg {

/// Ring context of a session plus the polynomial lists a structure input
/// file may carry. Lists are kept as unparsed text.
struct SessionConfig {
  RingSpec spec;
  std::uint32_t n = 1;
  std::vector<std::string> generators;
  std::vector<std::string> extras;
  std::vector<std::string> samples;

  DiffRingPtr ring() const { return make_ring(spec, n); }
};

/// Parses `key = value` lines. Keys: characteristic, kind (rationals,
/// prime-field, rational-functions), m, n, and the repeatable gen, extra,
/// sample. `#` starts a comment. Throws SyntaxError (position = line number)
/// or InvalidRing.
SessionConfig parse_config(std::string_view text);
SessionConfig load_config(const std::string& path);

/// Grammar:
///   poly   := ['-'] term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := atom ('^' nat)?
///   atom   := literal | tvar | dvar | '(' poly ')'
///   dvar   := ('d' nat ('^' nat)?)* 'y' nat
/// Division is only allowed by nonzero elements of the base ring. Parameters
/// are `t0`, `t1`, ... (`t` when m = 1). When m = n = 1, `y`, `y'`, `y''`, ...
/// are accepted as well. Throws SyntaxError, IndexOutOfRange or DivisionByZero.
DiffPoly parse_poly(std::string_view text, const DiffRingPtr& ring);

std::string to_text(const DiffPoly& f);
std::string to_text(const DerivVar& v, const DiffRing& ring);
std::string to_text(const BaseElem& c, const BaseRing& R);

}  // namespace dalg
