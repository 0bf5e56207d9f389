#pragma once

#include <array>
#include <vector>

#include "skein/reduce_d2.hpp"

namespace skein {

/// An element supported in the box l_i <= k_i.
struct BoxRepresentative {
  SkeinElement elem;
  std::array<Index, 3> box{};
};

struct S2Result {
  BoxRepresentative rep;
  Certificate cert;
};

/// Rewrites e into the generating box of the skein module of
/// S^2(k1,k2,k3) using relators of all three families. The result is a
/// representative, not a normal form. Requires k1, k2, k3 >= 2.
S2Result reduce_s2(const SkeinElement& e, const SurgeryParams& k, const ReduceOptions& opt = {});

/// The (k1+1)(k2+1)(k3+1) box monomials in lexicographic order.
std::vector<Monomial> generators(const SurgeryParams& k);

} // namespace skein
