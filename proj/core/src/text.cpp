#include "dalg/text.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dalg/error.hpp"

namespace dalg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line, const char* key) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw SyntaxError(line, std::string("expected a nonnegative integer for ") + key);
  return v;
}

class Parser {
 public:
  Parser(std::string_view text, const DiffRingPtr& ring) : s_(text), ring_(ring), R_(ring->base()) {}

  DiffPoly run() {
    DiffPoly f = poly();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg + " at position " + std::to_string(pos_)); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool digit_next() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (digit_next()) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::uint32_t nat() {
    const std::size_t at = pos_;
    const std::string d = digits();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc()) {
      pos_ = at;
      fail("number too large");
    }
    return v;
  }

  DiffPoly poly() {
    DiffPoly f(ring_);
    bool negate = accept('-');
    for (;;) {
      DiffPoly t = term();
      if (negate) f -= t; else f += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else return f;
    }
  }

  DiffPoly term() {
    DiffPoly f = factor();
    for (;;) {
      if (accept('*')) {
        f = f * factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        DiffPoly d = factor();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          throw Error(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
        }
        f = f.scaled(R_.inv(d.constant_value()));
      } else {
        return f;
      }
    }
  }

  DiffPoly factor() {
    DiffPoly a = atom();
    if (accept('^')) return a.pow(nat());
    return a;
  }

  DiffPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      DiffPoly f = poly();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class v(digits());
      return DiffPoly::constant(ring_, R_.from_rational(mpq_class(v)));
    }
    if (c == 't') return tvar();
    if (c == 'd' || c == 'y') return dvar();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  DiffPoly tvar() {
    const std::size_t at = pos_++;
    if (!R_.has_parameters()) {
      pos_ = at;
      fail("parameters require a rational-function base ring");
    }
    std::uint32_t i = 0;
    if (digit_next()) i = nat();
    else if (R_.num_derivations() != 1) fail("expected a parameter index");
    if (i >= R_.num_derivations())
      throw Error(ErrorCode::IndexOutOfRange, "parameter t" + std::to_string(i) + " out of range");
    return DiffPoly::constant(ring_, R_.parameter(i));
  }

  DiffPoly dvar() {
    const bool shorthand = ring_->m() == 1 && ring_->n() == 1;
    std::vector<std::uint32_t> alpha(ring_->m(), 0);
    while (peek() == 'd') {
      ++pos_;
      const std::uint32_t i = nat();
      std::uint32_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = nat();
      }
      if (i >= ring_->m())
        throw Error(ErrorCode::IndexOutOfRange, "derivation index d" + std::to_string(i) + " out of range");
      alpha[i] += e;
    }
    if (peek() != 'y') fail("expected 'y'");
    ++pos_;
    std::uint32_t var = 0;
    if (digit_next()) {
      var = nat();
    } else if (shorthand) {
      while (pos_ < s_.size() && s_[pos_] == '\'') {
        ++alpha[0];
        ++pos_;
      }
    } else {
      fail("expected an indeterminate index");
    }
    if (var >= ring_->n())
      throw Error(ErrorCode::IndexOutOfRange, "indeterminate y" + std::to_string(var) + " out of range");
    for (std::uint32_t a : alpha)
      if (a > UINT16_MAX) fail("derivative order too large");
    return DiffPoly::variable(ring_, DerivVar{var, DerivOp::from_exponents(alpha)});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  DiffRingPtr ring_;
  const BaseRing& R_;
};

std::string tmono_text(const TExponents& e, std::size_t nvars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += nvars == 1 ? "t" : "t" + std::to_string(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string tpoly_text(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    const mpq_class a = abs(c);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    const std::string m = tmono_text(e, p.nvars());
    if (m.empty()) out += a.get_str();
    else if (a == 1) out += m;
    else out += a.get_str() + "*" + m;
  }
  return out;
}

std::size_t tpoly_size(const TPoly& p) { return p.terms().size(); }

bool needs_sign(const BaseElem& c, const BaseRing& R) {
  if (c.is_constant_kind()) return sgn(c.constant()) < 0;
  if (R.characteristic() != 0) return false;
  const TPoly& num = c.rational_function().num();
  return !num.is_zero() && sgn(num.leading_coeff()) < 0;
}

// Text of a coefficient known to be nonnegative in the printing sense.
std::string magnitude_text(const BaseElem& c) {
  if (c.is_constant_kind()) return c.constant().get_str();
  const RatFunc& f = c.rational_function();
  const TPoly& den = f.den();
  const bool den_one = den.is_constant();
  if (f.num().is_constant()) {
    const std::string n = f.num().terms().begin()->second.get_str();
    return den_one ? n : n + "/" + (tpoly_size(den) == 1 ? tpoly_text(den) : "(" + tpoly_text(den) + ")");
  }
  const std::string n = tpoly_text(f.num());
  std::string out = tpoly_size(f.num()) == 1 ? n : "(" + n + ")";
  if (!den_one) out += "/" + (tpoly_size(den) == 1 ? tpoly_text(den) : "(" + tpoly_text(den) + ")");
  return out;
}

std::string monomial_text(const Monomial& m, const DiffRing& ring) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_text(v, ring);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

SessionConfig parse_config(std::string_view text) {
  SessionConfig cfg;
  bool kind_set = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SyntaxError(line_no, "expected key = value on line " + std::to_string(line_no));
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "characteristic") {
      cfg.spec.characteristic = parse_uint(value, line_no, "characteristic");
    } else if (key == "kind") {
      kind_set = true;
      if (value == "rationals") cfg.spec.kind = BaseKind::Rationals;
      else if (value == "prime-field") cfg.spec.kind = BaseKind::PrimeField;
      else if (value == "rational-functions") cfg.spec.kind = BaseKind::RationalFunctions;
      else throw SyntaxError(line_no, "unknown base kind '" + std::string(value) + "'");
    } else if (key == "m") {
      cfg.spec.num_derivations = static_cast<std::uint32_t>(parse_uint(value, line_no, "m"));
    } else if (key == "n") {
      cfg.n = static_cast<std::uint32_t>(parse_uint(value, line_no, "n"));
    } else if (key == "gen") {
      cfg.generators.emplace_back(value);
    } else if (key == "extra") {
      cfg.extras.emplace_back(value);
    } else if (key == "sample") {
      cfg.samples.emplace_back(value);
    } else {
      throw SyntaxError(line_no, "unknown key '" + key + "' on line " + std::to_string(line_no));
    }
  }
  if (!kind_set && cfg.spec.characteristic != 0) cfg.spec.kind = BaseKind::PrimeField;
  if (cfg.n == 0) throw Error(ErrorCode::InvalidRing, "n must be at least 1");
  BaseRing validate(cfg.spec);
  return cfg;
}

SessionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

DiffPoly parse_poly(std::string_view text, const DiffRingPtr& ring) { return Parser(text, ring).run(); }

std::string to_text(const DerivVar& v, const DiffRing& ring) {
  if (ring.m() == 1 && ring.n() == 1) return "y" + std::string(v.op[0], '\'');
  std::string out;
  for (std::uint32_t i = 0; i < ring.m(); ++i) {
    if (v.op[i] == 0) continue;
    out += "d" + std::to_string(i);
    if (v.op[i] > 1) out += "^" + std::to_string(v.op[i]);
    out += ' ';
  }
  return out + "y" + std::to_string(v.var);
}

std::string to_text(const BaseElem& c, const BaseRing& R) {
  if (needs_sign(c, R)) return "-" + magnitude_text(R.neg(c));
  return magnitude_text(c);
}

std::string to_text(const DiffPoly& f) {
  if (f.is_zero()) return "0";
  const BaseRing& R = f.base();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = needs_sign(t.coeff, R);
    const BaseElem mag = neg ? R.neg(t.coeff) : t.coeff;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += magnitude_text(mag);
    } else {
      if (!R.is_one(mag)) out += magnitude_text(mag) + "*";
      out += monomial_text(t.mono, f.ring());
    }
  }
  return out;
}

}  // namespace dalg
