#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skein/skein_element.hpp"

namespace skein {

/// Identities among relators and summation families that the engine can
/// check instance by instance.
enum class IdentityName {
  formula0,   // four-relator identity at the (-1, k2+1) corner
  formula01,  // R12^{-n1,k2+n2,n3} in terms of relators with larger n1, n1 >= 1
  formula02,  // the n2-indexed variant, n2 >= 1
  formula1a,  // R23 relator through R12 and R13 relators (first form)
  formula1b,  // R23 relator through R13 and R12 relators (second form)
  FplusF,     // F_{n1+1} + A^2 F_{n1} = 0 and the F~ analogue
  FourPlusF,  // four-term F / F~ cancellation
  RsumF,      // sum_j R12(n1,n2,n3+2j) = F + F = F~ + F~
  R12sums,    // alternating double sums of R12 telescoping to two F terms
  L1_1,       // alternating single sums of R12 along diagonals
  L1_2,       // R23 closed form through R12 and through R13 closed forms
  L1_3,       // reflected R12 sum equals reflected R13 sum
  L1_1_printed, // second equation of L1_1 exactly as printed (known misprint)
};

struct IntRange {
  Index lo = 0;
  Index hi = 0;
};

using IdentityParams = std::map<std::string, Index>;

struct IdentityId {
  IdentityName name = IdentityName::formula0;
  IdentityParams params;
};

/// Outcome of one identity instance. When not zero, `equation` names the
/// failing equation and `residual` holds its left-hand side minus right-hand
/// side.
struct ZeroWitness {
  bool zero = true;
  std::string equation;
  SkeinElement residual;
};

struct SweepFailure {
  IdentityParams params;
  std::string equation;
  SkeinElement residual;
};

struct SweepReport {
  std::string identity;
  std::size_t checked = 0;
  std::size_t skipped = 0; // instances outside the identity's hypotheses
  std::vector<SweepFailure> failures;
  bool ok() const { return failures.empty(); }
};

std::string_view identity_name(IdentityName n);
IdentityName identity_from_name(std::string_view s);
/// Every identity, in declaration order. `include_known_misprints` adds
/// L1_1_printed.
std::vector<IdentityName> all_identities(bool include_known_misprints = false);

/// Parameter names in enumeration order.
const std::vector<std::string>& identity_parameters(IdentityName n);
/// Default sweep ranges (index magnitudes <= 4).
std::map<std::string, IntRange> default_ranges(IdentityName n);
/// True when `params` satisfies the identity's hypotheses.
bool within_hypotheses(IdentityName n, const IdentityParams& params);

/// Builds the identity literally from relators and summation families and
/// tests it for exact zero. Throws OutOfRange on missing parameters or when
/// a hypothesis is violated.
ZeroWitness check_identity(const IdentityId& id);

/// Checks every instance in the box `ranges` (missing keys use the
/// defaults). Instances violating a hypothesis are counted as skipped.
/// The report is identical for any `jobs` value.
SweepReport sweep(IdentityName n, const std::map<std::string, IntRange>& ranges = {},
                  unsigned jobs = 1);

} // namespace skein
