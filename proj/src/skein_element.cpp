#include "skein/skein_element.hpp"

#include <sstream>

#include "skein/error.hpp"

namespace skein {

Monomial::Monomial(Index l1, Index l2, Index l3) : l_{l1, l2, l3} {
  if (l1 < 0 || l2 < 0 || l3 < 0)
    throw NegativeSupport("monomial with negative degree (" + std::to_string(l1) + "," +
                          std::to_string(l2) + "," + std::to_string(l3) + ")");
}

std::string Monomial::to_string() const {
  return "(" + std::to_string(l_[0]) + "," + std::to_string(l_[1]) + "," +
         std::to_string(l_[2]) + ")";
}

NormalizedIndex normalize_index(Index n) {
  if (n >= 0)
    return {1, n};
  if (n == -1)
    return {0, 0};
  // n <= -2, so -n-2 >= 0 and one application suffices.
  return {-1, checked_sub(checked_mul(n, -1), 2)};
}

SignedMonomial make_monomial(Index i1, Index i2, Index i3) {
  NormalizedIndex a = normalize_index(i1);
  NormalizedIndex b = normalize_index(i2);
  NormalizedIndex c = normalize_index(i3);
  int sign = a.sign * b.sign * c.sign;
  if (sign == 0)
    return {};
  return {sign, Monomial(a.index, b.index, c.index)};
}

std::vector<Index> cheb_linearize(Index a, Index b) {
  if (a < 0 || b < 0)
    throw NegativeSupport("cheb_linearize needs nonnegative degrees");
  std::vector<Index> out;
  Index lo = a < b ? a : b;
  Index top = checked_add(a, b);
  out.reserve(static_cast<std::size_t>(lo) + 1);
  for (Index i = 0; i <= lo; ++i)
    out.push_back(top - 2 * i);
  return out;
}

SkeinElement::SkeinElement(const Monomial& m, LaurentPoly coeff) {
  if (!coeff.is_zero())
    terms_.emplace(m, std::move(coeff));
}

LaurentPoly SkeinElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SkeinElement::add_term(const Monomial& m, const LaurentPoly& coeff) {
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted)
    return;
  it->second += coeff;
  if (it->second.is_zero())
    terms_.erase(it);
}

void SkeinElement::add_term(Index i1, Index i2, Index i3, const LaurentPoly& coeff) {
  SignedMonomial sm = make_monomial(i1, i2, i3);
  if (sm.sign == 0)
    return;
  add_term(sm.mono, sm.sign > 0 ? coeff : -coeff);
}

void SkeinElement::add_scaled(const SkeinElement& other, const LaurentPoly& coeff) {
  if (coeff.is_zero())
    return;
  for (const auto& [m, c] : other.terms_)
    add_term(m, c * coeff);
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

SkeinElement operator-(SkeinElement a) {
  for (auto& [m, c] : a.terms_)
    c = -c;
  return a;
}

SkeinElement SkeinElement::swap12() const {
  SkeinElement out;
  for (const auto& [m, c] : terms_)
    out.terms_.emplace(m.swap12(), c);
  return out;
}

std::string SkeinElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*s" << m.to_string();
  }
  return os.str();
}

SkeinElement elem_scale(const SkeinElement& e, const LaurentPoly& p) {
  SkeinElement out;
  out.add_scaled(e, p);
  return out;
}

SkeinElement elem_mul(const SkeinElement& e, const SkeinElement& f) {
  SkeinElement out;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [n, d] : f.terms()) {
      LaurentPoly cd = c * d;
      std::vector<Index> x = cheb_linearize(m.l1(), n.l1());
      std::vector<Index> y = cheb_linearize(m.l2(), n.l2());
      std::vector<Index> z = cheb_linearize(m.l3(), n.l3());
      for (Index i : x)
        for (Index j : y)
          for (Index k : z)
            out.add_term(Monomial(i, j, k), cd);
    }
  }
  return out;
}

} // namespace skein
