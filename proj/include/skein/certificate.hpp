#pragma once

#include <vector>

#include "skein/relators.hpp"

namespace skein {

struct CertificateStep {
  RelatorId id;
  LaurentPoly coeff;
  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// A witness that two elements agree modulo the relators: input - output
/// equals the sum of coeff * relator(id) over the steps.
struct Certificate {
  std::vector<CertificateStep> steps;

  /// sum of coeff * relator(id)
  SkeinElement combination() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// True when input - output - cert.combination() is exactly zero.
bool certificate_balances(const SkeinElement& input, const SkeinElement& output,
                          const Certificate& cert);

} // namespace skein
