#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "dalg/diffpoly.hpp"

namespace dalg {

/// rk((delta^alpha Y_i)^p) = (|alpha|, i, alpha_{m-1}, ..., alpha_0, p),
/// compared lexicographically in exactly this coordinate order.
struct Rank {
  std::uint32_t order = 0;
  std::uint32_t var = 0;
  std::vector<std::uint32_t> reversed_exponents;
  std::uint32_t power = 1;

  /// The tuple as a flat integer array.
  std::vector<std::uint64_t> tuple() const;

  bool operator==(const Rank&) const = default;
  std::strong_ordering operator<=>(const Rank& o) const;
};

Rank rank_of_power(const DerivVar& v, std::uint32_t p, std::uint32_t m);

/// u_f: the highest-ranked variable appearing in f. Throws ElementOfBaseRing.
DerivVar leader(const DiffPoly& f);
/// rk(u_f^d) with d = deg_{u_f}(f).
Rank rank_of_poly(const DiffPoly& f);

/// I(f): the coefficient of the top power of the leader.
DiffPoly initial(const DiffPoly& f);
/// S(f) = df/du_f. May be zero in characteristic p.
DiffPoly separant(const DiffPoly& f);

/// No proper derivative of u_g appears in f.
bool is_partially_reduced(const DiffPoly& f, const DiffPoly& g);
/// Partially reduced and deg_{u_g}(f) < deg_{u_g}(g).
bool is_reduced(const DiffPoly& f, const DiffPoly& g);
bool is_partially_reduced(const DiffPoly& f, const std::vector<DiffPoly>& G);
bool is_reduced(const DiffPoly& f, const std::vector<DiffPoly>& G);
bool is_autoreduced(const std::vector<DiffPoly>& G);

/// Rank of an autoreduced set: the ranks of its elements followed by a
/// virtual infinite tail of "infinity" entries, which are never stored.
class AutoRank {
 public:
  AutoRank() = default;
  explicit AutoRank(std::vector<Rank> prefix) : prefix_(std::move(prefix)) {}

  const std::vector<Rank>& prefix() const { return prefix_; }

  bool operator==(const AutoRank&) const = default;
  std::strong_ordering operator<=>(const AutoRank& o) const;

 private:
  std::vector<Rank> prefix_;
};

/// A finite autoreduced set, elements sorted by strictly increasing rank.
class AutoreducedSet {
 public:
  AutoreducedSet() = default;
  /// Sorts by rank and validates; throws NotAutoreduced.
  explicit AutoreducedSet(std::vector<DiffPoly> elements);

  const std::vector<DiffPoly>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const DiffPoly& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  const DerivVar& leader(std::size_t i) const { return leaders_[i]; }
  const DiffPoly& initial(std::size_t i) const { return initials_[i]; }
  const DiffPoly& separant(std::size_t i) const { return separants_[i]; }

  AutoRank rank() const;

 private:
  std::vector<DiffPoly> elements_;
  std::vector<DerivVar> leaders_;
  std::vector<DiffPoly> initials_;
  std::vector<DiffPoly> separants_;
};

AutoRank auto_rank(const AutoreducedSet& G);
std::strong_ordering compare_auto(const AutoreducedSet& a, const AutoreducedSet& b);

/// Exponents (n_i, m_i) of I(g_i)^{n_i} S(g_i)^{m_i}, one pair per element.
using HExponents = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// H(G) = prod I(g) S(g). `ring` supplies the unit for the empty set.
DiffPoly H_of(const AutoreducedSet& G, const DiffRingPtr& ring);
/// An element of H_G. Throws ZeroSeparant if a zero separant gets a positive power.
DiffPoly h_element(const AutoreducedSet& G, const HExponents& exps, const DiffRingPtr& ring);

}  // namespace dalg
