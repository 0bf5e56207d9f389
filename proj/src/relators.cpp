#include "skein/relators.hpp"

#include "skein/error.hpp"

namespace skein {

Index SurgeryParams::require_k3() const {
  if (!k3)
    throw InvalidParams("this relator family needs the third surgery coefficient k3");
  return *k3;
}

RelatorFamily family_from_int(int code) {
  switch (code) {
  case 12:
    return RelatorFamily::R12;
  case 13:
    return RelatorFamily::R13;
  case 23:
    return RelatorFamily::R23;
  default:
    throw InvalidParams("unknown relator family " + std::to_string(code) +
                        " (expected 12, 13 or 23)");
  }
}

std::string RelatorId::to_string() const {
  std::string s = "R" + std::to_string(family_code(family)) + "^{" + std::to_string(n1) + "," +
                  std::to_string(n2) + "," + std::to_string(n3) + "} k=(" +
                  std::to_string(params.k1) + "," + std::to_string(params.k2);
  if (params.k3)
    s += "," + std::to_string(*params.k3);
  return s + ")";
}

namespace {

void add_neg(SkeinElement& e, Exponent k, Index i1, Index i2, Index i3) {
  e.add_term(i1, i2, i3, LaurentPoly::monomial(-1, k));
}

} // namespace

SkeinElement r12_closed(Index n1, Index n2, Index n3) {
  const Exponent s = checked_add(n1, n2);
  SkeinElement e;
  add_neg(e, -s - 2, n1, n2, n3);
  add_neg(e, -s + 2, n1 - 2, n2 - 2, n3);
  add_neg(e, -s, n1 - 1, n2 - 1, n3 + 1);
  add_neg(e, -s, n1 - 1, n2 - 1, n3 - 1);
  return e;
}

SkeinElement r13_closed(Index n1, Index n2, Index n3) {
  const Exponent s = checked_add(n1, n3);
  SkeinElement e;
  add_neg(e, -s - 2, n1, n2, n3);
  add_neg(e, -s + 2, n1 - 2, n2, n3 - 2);
  add_neg(e, -s, n1 - 1, n2 + 1, n3 - 1);
  add_neg(e, -s, n1 - 1, n2 - 1, n3 - 1);
  return e;
}

SkeinElement r23_closed(Index n1, Index n2, Index n3) {
  const Exponent s = checked_add(n2, n3);
  SkeinElement e;
  add_neg(e, -s - 2, n1, n2, n3);
  add_neg(e, -s + 2, n1, n2 - 2, n3 - 2);
  add_neg(e, -s, n1 + 1, n2 - 1, n3 - 1);
  add_neg(e, -s, n1 - 1, n2 - 1, n3 - 1);
  return e;
}

SkeinElement closed_form(RelatorFamily f, Index n1, Index n2, Index n3) {
  switch (f) {
  case RelatorFamily::R12:
    return r12_closed(n1, n2, n3);
  case RelatorFamily::R13:
    return r13_closed(n1, n2, n3);
  case RelatorFamily::R23:
    return r23_closed(n1, n2, n3);
  }
  return {};
}

SkeinElement relator(RelatorFamily f, Index n1, Index n2, Index n3, const SurgeryParams& k) {
  switch (f) {
  case RelatorFamily::R12:
    return r12_closed(n1, n2, n3) - r12_closed(checked_sub(k.k1, n1), checked_sub(k.k2, n2), n3);
  case RelatorFamily::R13: {
    const Index k3 = k.require_k3();
    return r13_closed(n1, n2, n3) - r13_closed(checked_sub(k.k1, n1), n2, checked_sub(k3, n3));
  }
  case RelatorFamily::R23: {
    const Index k3 = k.require_k3();
    return r23_closed(n1, n2, n3) - r23_closed(n1, checked_sub(k.k2, n2), checked_sub(k3, n3));
  }
  }
  return {};
}

SkeinElement relator(const RelatorId& id) {
  return relator(id.family, id.n1, id.n2, id.n3, id.params);
}

Exponent leading_exponent(RelatorFamily f, Index n1, Index n2, Index n3) {
  switch (f) {
  case RelatorFamily::R12:
    return -checked_add(n1, n2) - 2;
  case RelatorFamily::R13:
    return -checked_add(n1, n3) - 2;
  case RelatorFamily::R23:
    return -checked_add(n2, n3) - 2;
  }
  return 0;
}

SkeinElement f_sum(Index u, Index n1, Index n2, Index n3) {
  const Exponent s = checked_add(n1, n2);
  const LaurentPoly c0 = LaurentPoly::monomial(-1, -s - 2);
  const LaurentPoly c1 = LaurentPoly::monomial(-1, -s);
  SkeinElement e;
  for (Index j = 0; j <= u; ++j)
    e.add_term(n1, n2, n3 + 2 * j, c0);
  for (Index j = 0; j <= u - 1; ++j)
    e.add_term(n1 - 1, n2 - 1, n3 + 1 + 2 * j, c1);
  return e;
}

SkeinElement f_tilde_sum(Index u, Index n1, Index n2, Index n3) {
  const Exponent s = checked_add(n1, n2);
  const LaurentPoly c0 = LaurentPoly::monomial(-1, -s - 2);
  const LaurentPoly c1 = LaurentPoly::monomial(-1, -s);
  SkeinElement e;
  for (Index j = 0; j <= u; ++j)
    e.add_term(n1, n2, n3 + 2 * j, c0);
  for (Index j = 0; j <= u + 1; ++j)
    e.add_term(n1 - 1, n2 - 1, n3 - 1 + 2 * j, c1);
  return e;
}

} // namespace skein
