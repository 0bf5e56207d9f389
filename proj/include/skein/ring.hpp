#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skein {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

// Overflow-checked exponent/index arithmetic. Throws OverflowError.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_sub(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// An element of Z[A, A^-1].
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal exactly when their term lists are equal. The zero
/// polynomial has no terms.
class LaurentPoly {
public:
  using Term = std::pair<Exponent, Integer>;

  LaurentPoly() = default;
  /// The constant polynomial c.
  LaurentPoly(Integer c); // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {} // NOLINT

  /// c * A^k.
  static LaurentPoly monomial(Integer c, Exponent k);
  /// A^k.
  static LaurentPoly a_pow(Exponent k) { return monomial(1, k); }
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are
  /// summed and zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of A^k (zero when absent).
  Integer coeff(Exponent k) const;
  /// True when the polynomial is c * A^k for a unit c = +-1.
  bool is_unit_monomial() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// Multiplies every exponent by `factor` (the substitution A -> A^factor).
  LaurentPoly substitute_power(Exponent factor) const;
  /// Multiplication by A^k.
  LaurentPoly shifted(Exponent k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

private:
  std::vector<Term> terms_; // sorted by exponent, nonzero coefficients
};

/// a + b*zeta in Z[zeta], zeta = e^{i pi/3}, reduced with zeta^2 = zeta - 1.
struct Eisenstein {
  Integer a = 0;
  Integer b = 0;

  static Eisenstein zeta() { return {0, 1}; }
  /// zeta^k for any integer k (zeta^6 = 1).
  static Eisenstein zeta_pow(Exponent k);

  bool is_zero() const { return a == 0 && b == 0; }

  Eisenstein& operator+=(const Eisenstein& o);
  Eisenstein& operator-=(const Eisenstein& o);
  Eisenstein& operator*=(const Eisenstein& o);
  friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
  friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
  friend Eisenstein operator-(const Eisenstein& x) { return {-x.a, -x.b}; }
  friend bool operator==(const Eisenstein&, const Eisenstein&) = default;

  std::string to_string() const;
};

/// The ring map Z[A^+-1] -> Z[zeta] with A -> zeta.
Eisenstein cyc_eval(const LaurentPoly& p);

} // namespace skein
