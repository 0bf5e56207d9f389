#include "skein/ring.hpp"

#include <algorithm>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("exponent overflow in addition");
  return r;
}

Exponent checked_sub(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("exponent overflow in subtraction");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("exponent overflow in multiplication");
  return r;
}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0)
    terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Integer c, Exponent k) {
  LaurentPoly p;
  if (c != 0)
    p.terms_.emplace_back(k, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0)
      p.terms_.pop_back();
  }
  return p;
}

Integer LaurentPoly::coeff(Exponent k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Exponent e) { return t.first < e; });
  if (it != terms_.end() && it->first == k)
    return it->second;
  return 0;
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 && abs(terms_.front().second) == 1;
}

namespace {

template <class Combine>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& x,
                                     const std::vector<LaurentPoly::Term>& y,
                                     Combine combine) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, combine(Integer(0), j->second));
      ++j;
    } else {
      Integer c = combine(i->second, j->second);
      if (c != 0)
        out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty())
    return *this;
  terms_ = merge(terms_, o.terms_, [](const Integer& a, const Integer& b) { return a + b; });
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty())
    return *this;
  terms_ = merge(terms_, o.terms_, [](const Integer& a, const Integer& b) { return a - b; });
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<LaurentPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      prods.emplace_back(checked_add(ea, eb), ca * cb);
  return LaurentPoly::from_terms(std::move(prods));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_)
    t.second = -t.second;
  return a;
}

LaurentPoly LaurentPoly::substitute_power(Exponent factor) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_)
    out.emplace_back(checked_mul(e, factor), c);
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_)
    t.first = checked_add(t.first, k);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    Integer mag = abs(c);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << "*";
    os << "A^" << e;
  }
  return os.str();
}

Eisenstein Eisenstein::zeta_pow(Exponent k) {
  // zeta^0..zeta^5 = 1, z, z - 1, -1, -z, 1 - z
  static const int table[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  Exponent r = k % 6;
  if (r < 0)
    r += 6;
  return {table[r][0], table[r][1]};
}

Eisenstein& Eisenstein::operator+=(const Eisenstein& o) {
  a += o.a;
  b += o.b;
  return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
  // (a + bz)(c + dz) = ac + (ad + bc)z + bd z^2, z^2 = z - 1
  Integer bd = b * o.b;
  Integer na = a * o.a - bd;
  Integer nb = a * o.b + b * o.a + bd;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

std::string Eisenstein::to_string() const {
  std::ostringstream os;
  os << a << (b < 0 ? " - " : " + ") << abs(b) << "*zeta";
  return os.str();
}

Eisenstein cyc_eval(const LaurentPoly& p) {
  Eisenstein out;
  for (const auto& [e, c] : p.terms()) {
    Eisenstein z = Eisenstein::zeta_pow(e);
    out.a += c * z.a;
    out.b += c * z.b;
  }
  return out;
}

} // namespace skein
