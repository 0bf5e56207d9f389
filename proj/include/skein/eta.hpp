#pragma once

#include "skein/relators.hpp"

namespace skein {

// Ingredients of the evaluation at A = e^{i pi/3} (r = 3, colors 0 and 1).

/// (-1)^n sum_{j=0}^{n} A^{2(n-2j)}; the quantum-integer form of the
/// Kirby-color coefficient. Requires n >= 0.
LaurentPoly delta(Index n);
/// (-1)^n A^{n^2+2n}. Requires n >= 0.
LaurentPoly mu(Index n);
/// mu(n)^e for any integer e.
LaurentPoly mu_pow(Index n, Index e);
/// (-1)^a sum_{j=0}^{a} A^{2(n+1)(a-2j)}. Requires n, a >= 0.
LaurentPoly f_coeff(Index n, Index a);
/// f_coeff(n, a) evaluated at zeta without expanding the sum.
Eisenstein f_coeff_at_zeta(Index n, Index a);

/// Value of the monomial m under eta for surgery coefficients k (k3 required).
Eisenstein eta_monomial(const Monomial& m, const SurgeryParams& k);
/// Linear extension of eta_monomial with coefficients evaluated at zeta.
Eisenstein eta_elem(const SkeinElement& e, const SurgeryParams& k);

} // namespace skein
