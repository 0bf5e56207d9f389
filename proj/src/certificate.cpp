#include "skein/certificate.hpp"

namespace skein {

SkeinElement Certificate::combination() const {
  SkeinElement sum;
  for (const auto& step : steps)
    sum.add_scaled(relator(step.id), step.coeff);
  return sum;
}

bool certificate_balances(const SkeinElement& input, const SkeinElement& output,
                          const Certificate& cert) {
  return (input - output - cert.combination()).is_zero();
}

} // namespace skein
