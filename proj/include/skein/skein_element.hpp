#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/ring.hpp"

namespace skein {

using Index = std::int64_t;

/// Basis label S_{l1}(a1) S_{l2}(a2) S_{l3}(a3) of the free skein module of
/// the thickened three-holed sphere. All degrees are nonnegative; negative
/// Chebyshev indices are normalized away before a Monomial is built.
class Monomial {
public:
  constexpr Monomial() = default;
  /// Throws NegativeSupport if any degree is negative.
  Monomial(Index l1, Index l2, Index l3);

  Index operator[](std::size_t i) const { return l_[i]; }
  Index l1() const { return l_[0]; }
  Index l2() const { return l_[1]; }
  Index l3() const { return l_[2]; }
  const std::array<Index, 3>& degrees() const { return l_; }

  /// The empty link, (0,0,0).
  static constexpr Monomial empty() { return Monomial(); }
  /// Swaps the roles of curves a1 and a2.
  Monomial swap12() const { return Monomial(l_[1], l_[0], l_[2]); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

private:
  std::array<Index, 3> l_{0, 0, 0};
};

/// Result of rewriting S_n via S_n = -S_{-n-2}: S_n = sign * S_index.
struct NormalizedIndex {
  int sign; // -1, 0 or +1
  Index index;
  friend bool operator==(const NormalizedIndex&, const NormalizedIndex&) = default;
};

NormalizedIndex normalize_index(Index n);

/// sign * mono. A zero sign always carries the empty monomial.
struct SignedMonomial {
  int sign = 0;
  Monomial mono;
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// S_{i1}(a1) S_{i2}(a2) S_{i3}(a3) for arbitrary integer indices.
SignedMonomial make_monomial(Index i1, Index i2, Index i3);

/// Chebyshev product rule: S_a S_b = sum of S_c over the returned list
/// [a+b, a+b-2, ..., |a-b|].
std::vector<Index> cheb_linearize(Index a, Index b);

/// A finite Z[A^+-1]-combination of basis monomials, kept canonical (no
/// zero coefficients). Iteration is lexicographic in (l1, l2, l3).
class SkeinElement {
public:
  using TermMap = std::map<Monomial, LaurentPoly>;

  SkeinElement() = default;
  /// coeff * m
  SkeinElement(const Monomial& m, LaurentPoly coeff);
  static SkeinElement empty_link() { return {Monomial::empty(), LaurentPoly(1)}; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const Monomial& m) const;

  /// Adds coeff * S_{i1}(a1) S_{i2}(a2) S_{i3}(a3), normalizing the indices.
  void add_term(Index i1, Index i2, Index i3, const LaurentPoly& coeff);
  /// Adds coeff * m.
  void add_term(const Monomial& m, const LaurentPoly& coeff);
  /// this += coeff * other
  void add_scaled(const SkeinElement& other, const LaurentPoly& coeff);

  SkeinElement& operator+=(const SkeinElement& o);
  SkeinElement& operator-=(const SkeinElement& o);
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator-(SkeinElement a);
  friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

  /// Relabels curves a1 <-> a2.
  SkeinElement swap12() const;

  std::string to_string() const;

private:
  TermMap terms_;
};

SkeinElement elem_scale(const SkeinElement& e, const LaurentPoly& p);
inline SkeinElement elem_add(const SkeinElement& e, const SkeinElement& f) { return e + f; }

/// Product in the skein algebra: curves a1, a2, a3 are disjoint, so the
/// decorations multiply independently by the Chebyshev product rule.
SkeinElement elem_mul(const SkeinElement& e, const SkeinElement& f);

} // namespace skein
