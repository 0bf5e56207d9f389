#pragma once

// Shared test helpers: seeded generators and an independent polynomial
// model of the free skein algebra.

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include "skein/skein_element.hpp"

namespace skein {

// Printers so doctest can show values in failed checks.
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Eisenstein& z) { return os << z.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SkeinElement& e) { return os << e.to_string(); }

} // namespace skein

namespace skein::test {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  LaurentPoly poly(int max_terms = 4, Exponent max_exp = 8, int max_coeff = 5) {
    LaurentPoly p;
    const auto n = uniform(0, max_terms);
    for (std::int64_t i = 0; i < n; ++i)
      p += LaurentPoly::monomial(uniform(-max_coeff, max_coeff), uniform(-max_exp, max_exp));
    return p;
  }

  LaurentPoly nonzero_poly(int max_terms = 4, Exponent max_exp = 8, int max_coeff = 5) {
    while (true)
      if (LaurentPoly p = poly(max_terms, max_exp, max_coeff); !p.is_zero())
        return p;
  }

  Monomial monomial(Index max_deg) {
    return {uniform(0, max_deg), uniform(0, max_deg), uniform(0, max_deg)};
  }

  SkeinElement element(int max_terms, Index max_deg, Exponent max_exp = 6) {
    SkeinElement e;
    const auto n = uniform(1, max_terms);
    for (std::int64_t i = 0; i < n; ++i)
      e.add_term(monomial(max_deg), nonzero_poly(3, max_exp, 4));
    return e;
  }

private:
  std::mt19937_64 rng_;
};

// Univariate integer polynomial, dense, index = power of x.
template <class C>
using UniPoly = std::vector<C>;

/// S_n(x) by the three-term recurrence, run backwards for n < 0. Does not
/// use the library's index normalization.
template <class C>
UniPoly<C> chebyshev(Index n) {
  UniPoly<C> prev{C(1)}, cur{C(0), C(1)}; // S_0, S_1
  if (n == 0)
    return prev;
  if (n > 0) {
    for (Index q = 1; q < n; ++q) {
      UniPoly<C> next(cur.size() + 1, C(0));
      for (std::size_t i = 0; i < cur.size(); ++i)
        next[i + 1] += cur[i];
      for (std::size_t i = 0; i < prev.size(); ++i)
        next[i] -= prev[i];
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // S_{q-1} = x S_q - S_{q+1}, starting from (S_1, S_0).
  UniPoly<C> upper = cur, lower = prev;
  for (Index q = 0; q > n; --q) {
    UniPoly<C> next(lower.size() + 1, C(0));
    for (std::size_t i = 0; i < lower.size(); ++i)
      next[i + 1] += lower[i];
    for (std::size_t i = 0; i < upper.size(); ++i)
      next[i] -= upper[i];
    upper = std::move(lower);
    lower = std::move(next);
  }
  while (lower.size() > 1 && lower.back() == C(0))
    lower.pop_back();
  return lower;
}

/// Sparse polynomial in x, y, z over C.
template <class C>
using TriPoly = std::map<std::array<int, 3>, C>;

template <class C>
void tri_add(TriPoly<C>& p, const std::array<int, 3>& k, const C& c) {
  if (c == C(0))
    return;
  auto [it, fresh] = p.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == C(0))
      p.erase(it);
  }
}

template <class C>
TriPoly<C> tri_mul(const TriPoly<C>& a, const TriPoly<C>& b) {
  TriPoly<C> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      tri_add(out, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return out;
}

/// coeff * S_{i1}(x) S_{i2}(y) S_{i3}(z), any integer indices.
template <class C>
TriPoly<C> oracle_term(Index i1, Index i2, Index i3, const C& coeff) {
  const auto px = chebyshev<C>(i1), py = chebyshev<C>(i2), pz = chebyshev<C>(i3);
  TriPoly<C> out;
  for (std::size_t a = 0; a < px.size(); ++a)
    for (std::size_t b = 0; b < py.size(); ++b)
      for (std::size_t c = 0; c < pz.size(); ++c)
        tri_add(out, {int(a), int(b), int(c)}, coeff * px[a] * py[b] * pz[c]);
  return out;
}

inline TriPoly<LaurentPoly> poly_oracle(const SkeinElement& e) {
  TriPoly<LaurentPoly> out;
  for (const auto& [m, c] : e.terms())
    for (const auto& [k, v] : oracle_term<LaurentPoly>(m.l1(), m.l2(), m.l3(), c))
      tri_add(out, k, v);
  return out;
}

} // namespace skein::test
