#include "skein/eta.hpp"

#include <array>

#include "skein/error.hpp"

namespace skein {

namespace {

void require_nonneg(Index v, const char* what) {
  if (v < 0)
    throw InvalidParams(std::string(what) + " must be nonnegative (got " + std::to_string(v) +
                        ")");
}

int parity_sign(Index n) { return n % 2 == 0 ? 1 : -1; }

} // namespace

LaurentPoly delta(Index n) {
  require_nonneg(n, "delta index");
  LaurentPoly p;
  for (Index j = 0; j <= n; ++j)
    p += LaurentPoly::monomial(parity_sign(n), checked_mul(2, n - 2 * j));
  return p;
}

LaurentPoly mu(Index n) {
  require_nonneg(n, "mu index");
  return LaurentPoly::monomial(parity_sign(n), checked_add(checked_mul(n, n), checked_mul(2, n)));
}

LaurentPoly mu_pow(Index n, Index e) {
  require_nonneg(n, "mu index");
  const Exponent k = checked_mul(checked_add(checked_mul(n, n), checked_mul(2, n)), e);
  return LaurentPoly::monomial(parity_sign(n) == 1 ? 1 : parity_sign(e), k);
}

LaurentPoly f_coeff(Index n, Index a) {
  require_nonneg(n, "f_coeff color");
  require_nonneg(a, "f_coeff degree");
  const Exponent step = checked_mul(2, checked_add(n, 1));
  LaurentPoly p;
  for (Index j = 0; j <= a; ++j)
    p += LaurentPoly::monomial(parity_sign(a), checked_mul(step, a - 2 * j));
  return p;
}

Eisenstein f_coeff_at_zeta(Index n, Index a) {
  require_nonneg(n, "f_coeff color");
  require_nonneg(a, "f_coeff degree");
  // Exponents step by 4(n+1) in j, so the summands repeat with period 3.
  const Exponent step = 2 * ((n + 1) % 6);
  const Exponent base = (step * (a % 6)) % 6;
  std::array<Eisenstein, 3> period;
  for (Index j = 0; j < 3; ++j)
    period[j] = Eisenstein::zeta_pow(base - 2 * step * j);
  const Index count = a + 1;
  Eisenstein sum;
  const Eisenstein full = period[0] + period[1] + period[2];
  sum += Eisenstein{Integer(count / 3), 0} * full;
  for (Index j = 0; j < count % 3; ++j)
    sum += period[j];
  return parity_sign(a) == 1 ? sum : -sum;
}

Eisenstein eta_monomial(const Monomial& m, const SurgeryParams& params) {
  const std::array<Index, 3> k{params.k1, params.k2, params.require_k3()};
  Eisenstein d[2], f[2][2], deco[2][3];
  std::array<std::array<Eisenstein, 3>, 2> twist;
  for (Index i = 0; i < 2; ++i) {
    d[i] = cyc_eval(delta(i));
    for (Index a = 0; a < 2; ++a)
      f[i][a] = cyc_eval(f_coeff(i, a));
    for (int j = 0; j < 3; ++j) {
      twist[i][j] = cyc_eval(mu_pow(i, -k[j]));
      deco[i][j] = f_coeff_at_zeta(i, m[j]);
    }
  }
  Eisenstein total;
  for (int i0 = 0; i0 < 2; ++i0)
    for (int i1 = 0; i1 < 2; ++i1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int i3 = 0; i3 < 2; ++i3) {
          Eisenstein t = d[i0] * d[i0] * d[i1] * d[i2] * d[i3];
          t *= twist[i1][0] * twist[i2][1] * twist[i3][2];
          t *= f[i0][i1] * f[i0][i2] * f[i0][i3];
          t *= deco[i1][0] * deco[i2][1] * deco[i3][2];
          total += t;
        }
  return total;
}

Eisenstein eta_elem(const SkeinElement& e, const SurgeryParams& k) {
  Eisenstein total;
  for (const auto& [m, c] : e.terms())
    total += cyc_eval(c) * eta_monomial(m, k);
  return total;
}

} // namespace skein
