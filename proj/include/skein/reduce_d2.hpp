#pragma once

#include <cstddef>
#include <vector>

#include "skein/certificate.hpp"

namespace skein {

/// Where a nonnegative monomial sits relative to the basis G^{k1,k2}.
enum class RegionTag {
  InBasis,
  Region1, // n1 > k1
  Region2, // k1/2 < n1 <= k1, n2 > k2/2
  Region3, // n1 <= k1/2, n2 >= k2/2, minus the fixed point (k1/2, k2/2)
};

std::string_view region_name(RegionTag t);

struct ReduceOptions {
  /// Abort with TermLimitExceeded once the working element exceeds this
  /// many terms.
  std::size_t max_terms = 1'000'000;
};

/// Region of m. For k1 > k2 the curves are relabelled first, so the answer
/// describes the swapped basis that reduce_d2 produces. Requires k1, k2 >= 1.
RegionTag region_of(const Monomial& m, const SurgeryParams& k);
inline bool in_basis(const Monomial& m, const SurgeryParams& k) {
  return region_of(m, k) == RegionTag::InBasis;
}

struct D2Result {
  SkeinElement normal;
  Certificate cert;
};

/// Normal form of e on the free basis of the skein module of D^2(k1,k2),
/// with a certificate over family-12 relators. Deterministic.
D2Result reduce_d2(const SkeinElement& e, const SurgeryParams& k, const ReduceOptions& opt = {});

/// Basis monomials with n3 <= n3_max, lexicographically sorted.
std::vector<Monomial> enumerate_basis(const SurgeryParams& k, Index n3_max);

namespace detail {
// Cancels the term at `pivot` with coeff * relator(id); records the step
// as it enters the certificate (with the opposite sign). Throws
// NonTermination if the relator's coefficient at pivot is not the
// expected unit monomial -A^{lead}.
SkeinElement cancel_with(SkeinElement& e, const Monomial& pivot, const RelatorId& id,
                         Certificate& cert);
void check_size(const SkeinElement& e, const ReduceOptions& opt);
} // namespace detail

} // namespace skein
