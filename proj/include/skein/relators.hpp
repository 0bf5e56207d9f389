#pragma once

#include <optional>
#include <string>

#include "skein/skein_element.hpp"

namespace skein {

/// Surgery coefficients of D^2(k1,k2) or, with k3 set, S^2(k1,k2,k3).
/// Any integers are accepted here; the reductions check their own ranges.
struct SurgeryParams {
  Index k1 = 1;
  Index k2 = 1;
  std::optional<Index> k3;

  static SurgeryParams d2(Index k1, Index k2) { return {k1, k2, std::nullopt}; }
  static SurgeryParams s2(Index k1, Index k2, Index k3) { return {k1, k2, k3}; }

  /// k3, or InvalidParams when the parameters describe a D^2 setting.
  Index require_k3() const;

  friend bool operator==(const SurgeryParams&, const SurgeryParams&) = default;
};

/// Which pair of boundary curves the sliding band joins.
enum class RelatorFamily { R12 = 12, R13 = 13, R23 = 23 };

RelatorFamily family_from_int(int code);
inline int family_code(RelatorFamily f) { return static_cast<int>(f); }

/// One handle-sliding relator R_f^{n1,n2,n3} for given surgery parameters.
struct RelatorId {
  RelatorFamily family = RelatorFamily::R12;
  Index n1 = 0;
  Index n2 = 0;
  Index n3 = 0;
  SurgeryParams params;

  friend bool operator==(const RelatorId&, const RelatorId&) = default;
  std::string to_string() const;
};

// Closed forms of the three-curve band elements. Each is a four-term
// combination; indices may be any integers and are normalized per term.
SkeinElement r12_closed(Index n1, Index n2, Index n3);
SkeinElement r13_closed(Index n1, Index n2, Index n3);
SkeinElement r23_closed(Index n1, Index n2, Index n3);
SkeinElement closed_form(RelatorFamily f, Index n1, Index n2, Index n3);

/// The relator: closed form at n minus closed form at the reflected index.
///   12 reflects (n1, n2) through (k1, k2)
///   13 reflects (n1, n3) through (k1, k3)
///   23 reflects (n2, n3) through (k2, k3)
SkeinElement relator(const RelatorId& id);
SkeinElement relator(RelatorFamily f, Index n1, Index n2, Index n3, const SurgeryParams& k);

/// Exponent e with relator(id) = -A^e * (n1,n2,n3) + lower terms, the
/// leading coefficient used when the relator serves as a rewriting pivot.
Exponent leading_exponent(RelatorFamily f, Index n1, Index n2, Index n3);

// Summation families used to telescope sums of R12 closed forms:
//   F_u   = -A^{-n1-n2-2} sum_{j=0}^{u}   s(n1,n2,n3+2j)
//           -A^{-n1-n2}   sum_{j=0}^{u-1} s(n1-1,n2-1,n3+1+2j)
//   F~_u  = -A^{-n1-n2-2} sum_{j=0}^{u}   s(n1,n2,n3+2j)
//           -A^{-n1-n2}   sum_{j=0}^{u+1} s(n1-1,n2-1,n3-1+2j)
// Sums whose upper bound is below the lower bound are empty.
SkeinElement f_sum(Index u, Index n1, Index n2, Index n3);
SkeinElement f_tilde_sum(Index u, Index n1, Index n2, Index n3);

} // namespace skein
