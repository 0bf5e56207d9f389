#include "skein/identities.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <thread>

#include "skein/error.hpp"
#include "skein/relators.hpp"

namespace skein {

namespace {

constexpr std::array<std::string_view, 13> kNames = {
    "formula0", "formula01", "formula02", "formula1a", "formula1b", "FplusF", "FourPlusF",
    "RsumF",    "R12sums",   "L1_1",      "L1_2",      "L1_3",      "L1_1_printed"};

Index sgn(Index i) { return (i % 2 == 0) ? 1 : -1; }

// Accumulates sign * A^a * x into an element.
struct Sum {
  SkeinElement e;
  void add(Index sign, Exponent a, const SkeinElement& x) {
    e.add_scaled(x, LaurentPoly::monomial(sign, a));
  }
};

class Params {
public:
  Params(IdentityName n, const IdentityParams& p) : name_(n), p_(p) {}
  Index operator()(const std::string& key) const {
    auto it = p_.find(key);
    if (it == p_.end())
      throw OutOfRange("identity " + std::string(identity_name(name_)) +
                       " is missing parameter " + key);
    return it->second;
  }

private:
  IdentityName name_;
  const IdentityParams& p_;
};

// A zero test over one or more equations (each already moved to "lhs = 0").
class Equations {
public:
  void check(std::string label, SkeinElement residual) {
    if (witness_.zero && !residual.is_zero()) {
      witness_.zero = false;
      witness_.equation = std::move(label);
      witness_.residual = std::move(residual);
    }
  }
  ZeroWitness result() && { return std::move(witness_); }

private:
  ZeroWitness witness_;
};

ZeroWitness formula0(const Params& p) {
  const Index k2 = p("k2"), n3 = p("n3");
  const auto k = SurgeryParams::d2(p("k1"), k2);
  auto R = [&](Index a, Index b, Index c) { return relator(RelatorFamily::R12, a, b, c, k); };
  Sum s;
  s.add(1, 0, R(-1, k2 + 1, n3));
  s.add(1, 2, R(0, k2, n3 - 1));
  s.add(1, 2, R(0, k2, n3 + 1));
  s.add(1, 4, R(1, k2 - 1, n3));
  Equations eq;
  eq.check("formula0", std::move(s.e));
  return std::move(eq).result();
}

// sum_{i=ilo}^{ihi} sum_{j=0}^{i+joff} (-1)^i A^a R(idx(i, j))
template <class Idx>
void double_sum(Sum& s, Index sign, Exponent a, Index ilo, Index ihi, Index joff,
                const SurgeryParams& k, Idx idx) {
  for (Index i = ilo; i <= ihi; ++i)
    for (Index j = 0; j <= i + joff; ++j) {
      auto [x, y, z] = idx(i, j);
      s.add(sign * sgn(i), a, relator(RelatorFamily::R12, x, y, z, k));
    }
}

ZeroWitness formula01(const Params& p) {
  const Index k1 = p("k1"), k2 = p("k2"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  const auto k = SurgeryParams::d2(k1, k2);
  using T = std::array<Index, 3>;
  Sum s;
  s.add(1, 0, relator(RelatorFamily::R12, -n1, k2 + n2, n3, k));
  s.add(-1, 2 * n1 + 2 * n2, relator(RelatorFamily::R12, -n1 + k1, n2, n3, k));
  double_sum(s, 1, 2 * n1 - 2, 0, n1 - 2, 0, k,
             [&](Index i, Index j) { return T{n1 - 2 - i, k2 + n2 - i, n3 - i + 2 * j}; });
  double_sum(s, 1, 2 * n1, 0, n1 - 1, 1, k,
             [&](Index i, Index j) { return T{n1 - 1 - i, k2 + n2 - 1 - i, n3 - 1 - i + 2 * j}; });
  double_sum(s, 1, 2 * n1, 1, n1 - 2, -1, k,
             [&](Index i, Index j) { return T{n1 - 1 - i, k2 + n2 - 1 - i, n3 + 1 - i + 2 * j}; });
  double_sum(s, 1, 2 * n1 + 2, 0, n1 - 1, 0, k,
             [&](Index i, Index j) { return T{n1 - i, k2 + n2 - 2 - i, n3 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2 + 2, 0, n1 - 2, 0, k,
             [&](Index i, Index j) { return T{n1 + k1 - 2 - i, n2 - i, n3 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2, 0, n1 - 1, 1, k,
             [&](Index i, Index j) { return T{n1 + k1 - 1 - i, n2 - 1 - i, n3 - 1 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2, 1, n1 - 2, -1, k,
             [&](Index i, Index j) { return T{n1 + k1 - 1 - i, n2 - 1 - i, n3 + 1 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2 - 2, 0, n1 - 1, 0, k,
             [&](Index i, Index j) { return T{n1 + k1 - i, n2 - 2 - i, n3 - i + 2 * j}; });
  Equations eq;
  eq.check("formula01", std::move(s.e));
  return std::move(eq).result();
}

ZeroWitness formula02(const Params& p) {
  const Index k1 = p("k1"), k2 = p("k2"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  const auto k = SurgeryParams::d2(k1, k2);
  using T = std::array<Index, 3>;
  Sum s;
  s.add(1, 0, relator(RelatorFamily::R12, -n1, k2 + n2, n3, k));
  s.add(-1, 2 * n1 + 2 * n2, relator(RelatorFamily::R12, -n1 + k1, n2, n3, k));
  double_sum(s, 1, 2 * n1 + 2, 0, n2 - 2, 0, k,
             [&](Index i, Index j) { return T{n1 - i, k2 + n2 - 2 - i, n3 - i + 2 * j}; });
  double_sum(s, 1, 2 * n1, 0, n2 - 1, 1, k,
             [&](Index i, Index j) { return T{n1 - 1 - i, k2 + n2 - 1 - i, n3 - 1 - i + 2 * j}; });
  double_sum(s, 1, 2 * n1, 1, n2 - 2, -1, k,
             [&](Index i, Index j) { return T{n1 - 1 - i, k2 + n2 - 1 - i, n3 + 1 - i + 2 * j}; });
  double_sum(s, 1, 2 * n1 - 2, 0, n2 - 1, 0, k,
             [&](Index i, Index j) { return T{n1 - 2 - i, k2 + n2 - i, n3 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2 - 2, 0, n2 - 2, 0, k,
             [&](Index i, Index j) { return T{n1 + k1 - i, n2 - 2 - i, n3 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2, 0, n2 - 1, 1, k,
             [&](Index i, Index j) { return T{n1 + k1 - 1 - i, n2 - 1 - i, n3 - 1 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2, 1, n2 - 2, -1, k,
             [&](Index i, Index j) { return T{n1 + k1 - 1 - i, n2 - 1 - i, n3 + 1 - i + 2 * j}; });
  double_sum(s, -1, 2 * n2 + 2, 0, n2 - 1, 0, k,
             [&](Index i, Index j) { return T{n1 + k1 - 2 - i, n2 - i, n3 - i + 2 * j}; });
  Equations eq;
  eq.check("formula02", std::move(s.e));
  return std::move(eq).result();
}

ZeroWitness formula1a(const Params& p) {
  const Index k1 = p("k1"), k2 = p("k2"), k3 = p("k3"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  const auto k = SurgeryParams::s2(k1, k2, k3);
  constexpr auto R12 = RelatorFamily::R12;
  constexpr auto R13 = RelatorFamily::R13;
  Sum s;
  s.add(1, 0, relator(RelatorFamily::R23, n1, n2, n3, k));
  for (Index i = 0; i <= n1; ++i) {
    const Index m = -sgn(i);
    s.add(m, n1 - n3, relator(R12, n1 - i, n2 - i, n3 + i, k));
    s.add(m, n1 - n3 + 2, relator(R12, n1 + 1 - i, n2 - 1 - i, n3 - 1 + i, k));
    s.add(m, n1 + n2 - k2, relator(R13, n1 - i, n2 - k2 - 2 - i, -n3 + k3 - i, k));
    s.add(m, n1 + n2 - k2 + 2, relator(R13, n1 + 1 - i, n2 - k2 - 1 - i, -n3 + k3 - 1 - i, k));
  }
  Equations eq;
  eq.check("formula1a", std::move(s.e));
  return std::move(eq).result();
}

ZeroWitness formula1b(const Params& p) {
  const Index k1 = p("k1"), k2 = p("k2"), k3 = p("k3"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  const auto k = SurgeryParams::s2(k1, k2, k3);
  constexpr auto R12 = RelatorFamily::R12;
  constexpr auto R13 = RelatorFamily::R13;
  Sum s;
  s.add(1, 0, relator(RelatorFamily::R23, n1, n2, n3, k));
  for (Index i = 0; i <= n1; ++i) {
    const Index m = -sgn(i);
    s.add(m, n1 - n2, relator(R13, n1 - i, n2 + i, n3 - i, k));
    s.add(m, n1 - n2 + 2, relator(R13, n1 + 1 - i, n2 - 1 + i, n3 - 1 - i, k));
    s.add(m, n1 + n3 - k3, relator(R12, n1 - i, -n2 + k2 - i, n3 - k3 - 2 - i, k));
    s.add(m, n1 + n3 - k3 + 2, relator(R12, n1 + 1 - i, -n2 + k2 - 1 - i, n3 - k3 - 1 - i, k));
  }
  Equations eq;
  eq.check("formula1b", std::move(s.e));
  return std::move(eq).result();
}

ZeroWitness fplusf(const Params& p) {
  const Index n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  Equations eq;
  Sum a;
  a.add(1, 0, f_sum(n1 + 1, -1, n2, n3));
  a.add(1, 2, f_sum(n1, 0, n2 - 1, n3 + 1));
  eq.check("F", std::move(a.e));
  Sum b;
  b.add(1, 0, f_tilde_sum(n1 - 1, -1, n2, n3));
  b.add(1, 2, f_tilde_sum(n1, 0, n2 - 1, n3 - 1));
  eq.check("F~", std::move(b.e));
  return std::move(eq).result();
}

ZeroWitness fourplusf(const Params& p) {
  const Index k = p("k"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  Sum s;
  s.add(1, 2 * n1, f_tilde_sum(n1, k, n1 - n2 - 1, n3));
  s.add(1, 2 * n1 + 2, f_tilde_sum(n1 - 1, k - 1, n1 - n2, n3 + 1));
  s.add(1, 2 * n2 + 2, f_sum(n1 + 1, k - 1, n2 - n1, n3 - 1));
  s.add(1, 2 * n2, f_sum(n1, k, n2 - n1 - 1, n3));
  Equations eq;
  eq.check("FourPlusF", std::move(s.e));
  return std::move(eq).result();
}

ZeroWitness rsumf(const Params& p) {
  const Index u = p("u"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  SkeinElement lhs;
  for (Index j = 0; j <= u; ++j)
    lhs += r12_closed(n1, n2, n3 + 2 * j);
  Equations eq;
  eq.check("F", lhs - f_sum(u, n1, n2, n3) - f_sum(u + 1, n1 - 1, n2 - 1, n3 - 1));
  eq.check("F~", lhs - f_tilde_sum(u, n1, n2, n3) - f_tilde_sum(u - 1, n1 - 1, n2 - 1, n3 + 1));
  return std::move(eq).result();
}

ZeroWitness r12sums(const Params& p) {
  const Index u0 = p("u0"), u1 = p("u1"), c = p("c"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  Equations eq;
  {
    Sum s;
    for (Index i = u0; i <= u1; ++i)
      for (Index j = 0; j <= i + c; ++j)
        s.add(sgn(i), 0, r12_closed(n1 - i, n2 - i, n3 - i + 2 * j));
    s.add(-sgn(u0), 0, f_sum(u0 + c, n1 - u0, n2 - u0, n3 - u0));
    s.add(-sgn(u1), 0, f_sum(u1 + c + 1, n1 - u1 - 1, n2 - u1 - 1, n3 - u1 - 1));
    eq.check("descending", std::move(s.e));
  }
  {
    Sum s;
    for (Index i = u0; i <= u1; ++i)
      for (Index j = 0; j <= i + c; ++j)
        s.add(sgn(i), 0, r12_closed(n1 + i, n2 + i, n3 - i + 2 * j));
    s.add(-sgn(u0), 0, f_tilde_sum(u0 + c - 1, n1 + u0 - 1, n2 + u0 - 1, n3 - u0 + 1));
    s.add(-sgn(u1), 0, f_tilde_sum(u1 + c, n1 + u1, n2 + u1, n3 - u1));
    eq.check("ascending", std::move(s.e));
  }
  return std::move(eq).result();
}

SkeinElement diagonal_sum(Index u0, Index u1, Index n1, Index n2, Index dir) {
  SkeinElement e;
  for (Index i = u0; i <= u1; ++i)
    e.add_scaled(r12_closed(n1 + dir * i, n2 + dir * i, i), LaurentPoly(Integer(sgn(i))));
  return e;
}

ZeroWitness l1_1(const Params& p, bool printed_second) {
  const Index u0 = p("u0"), u1 = p("u1"), n1 = p("n1"), n2 = p("n2");
  const Index a = sgn(u0), b = sgn(u1);
  const Exponent s = n1 + n2;
  Equations eq;
  if (!printed_second) {
    SkeinElement e = diagonal_sum(u0, u1, n1, n2, -1);
    e.add_term(n1 - u0, n2 - u0, u0, LaurentPoly::monomial(a, -s + 2 * u0 - 2));
    e.add_term(n1 - u0 - 1, n2 - u0 - 1, u0 - 1, LaurentPoly::monomial(a, -s + 2 * u0));
    e.add_term(n1 - u1 - 1, n2 - u1 - 1, u1 + 1, LaurentPoly::monomial(b, -s + 2 * u1));
    e.add_term(n1 - u1 - 2, n2 - u1 - 2, u1, LaurentPoly::monomial(b, -s + 2 * u1 + 2));
    eq.check("descending", std::move(e));
  }
  SkeinElement e = diagonal_sum(u0, u1, n1, n2, 1);
  if (printed_second) {
    e.add_term(n1 + u0, n2 + u0, u0, LaurentPoly::monomial(a, -s - 2 * u0 - 2));
    e.add_term(n1 + u0 - 1, n2 + u0 - 1, u0 + 1, LaurentPoly::monomial(a, -s - 2 * u0));
  } else {
    e.add_term(n1 + u0 - 2, n2 + u0 - 2, u0, LaurentPoly::monomial(a, -s - 2 * u0 + 2));
    e.add_term(n1 + u0 - 1, n2 + u0 - 1, u0 - 1, LaurentPoly::monomial(a, -s - 2 * u0));
  }
  e.add_term(n1 + u1, n2 + u1, u1, LaurentPoly::monomial(b, -s - 2 * u1 - 2));
  e.add_term(n1 + u1 - 1, n2 + u1 - 1, u1 + 1, LaurentPoly::monomial(b, -s - 2 * u1));
  eq.check("ascending", std::move(e));
  return std::move(eq).result();
}

ZeroWitness l1_2(const Params& p) {
  const Index n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  const SkeinElement r23 = r23_closed(n1, n2, n3);
  Sum a, b;
  a.add(1, 0, r23);
  b.add(1, 0, r23);
  for (Index i = 0; i <= n1; ++i) {
    const Index m = -sgn(i);
    a.add(m, n1 - n3, r12_closed(n1 - i, n2 - i, n3 + i));
    a.add(m, n1 - n3 + 2, r12_closed(n1 + 1 - i, n2 - 1 - i, n3 - 1 + i));
    b.add(m, n1 - n2, r13_closed(n1 - i, n2 + i, n3 - i));
    b.add(m, n1 - n2 + 2, r13_closed(n1 + 1 - i, n2 - 1 + i, n3 - 1 - i));
  }
  Equations eq;
  eq.check("via R12", std::move(a.e));
  eq.check("via R13", std::move(b.e));
  return std::move(eq).result();
}

ZeroWitness l1_3(const Params& p) {
  const Index k1 = p("k1"), n1 = p("n1"), n2 = p("n2"), n3 = p("n3");
  Sum s;
  for (Index i = 0; i <= n1; ++i) {
    const Index m = sgn(i);
    s.add(m, -n3, r12_closed(-n1 + k1 + i, n2 + i, n3 + i));
    s.add(m, -n3 + 2, r12_closed(-n1 + k1 - 1 + i, n2 + 1 + i, n3 - 1 + i));
    s.add(-m, -n2, r13_closed(-n1 + k1 + i, n2 + i, n3 + i));
    s.add(-m, -n2 + 2, r13_closed(-n1 + k1 - 1 + i, n2 - 1 + i, n3 + 1 + i));
  }
  Equations eq;
  eq.check("L1_3", std::move(s.e));
  return std::move(eq).result();
}

IntRange r(Index lo, Index hi) { return {lo, hi}; }

} // namespace

std::string_view identity_name(IdentityName n) { return kNames[static_cast<std::size_t>(n)]; }

IdentityName identity_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == s)
      return static_cast<IdentityName>(i);
  throw OutOfRange("unknown identity '" + std::string(s) + "'");
}

std::vector<IdentityName> all_identities(bool include_known_misprints) {
  std::vector<IdentityName> out;
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    auto n = static_cast<IdentityName>(i);
    if (n == IdentityName::L1_1_printed && !include_known_misprints)
      continue;
    out.push_back(n);
  }
  return out;
}

const std::vector<std::string>& identity_parameters(IdentityName n) {
  static const std::vector<std::string> k12n3{"k1", "k2", "n3"};
  static const std::vector<std::string> k12n{"k1", "k2", "n1", "n2", "n3"};
  static const std::vector<std::string> k123n{"k1", "k2", "k3", "n1", "n2", "n3"};
  static const std::vector<std::string> nnn{"n1", "n2", "n3"};
  static const std::vector<std::string> kn{"k", "n1", "n2", "n3"};
  static const std::vector<std::string> un{"u", "n1", "n2", "n3"};
  static const std::vector<std::string> tele{"u0", "u1", "c", "n1", "n2", "n3"};
  static const std::vector<std::string> diag{"u0", "u1", "n1", "n2"};
  static const std::vector<std::string> k1n{"k1", "n1", "n2", "n3"};
  switch (n) {
  case IdentityName::formula0:
    return k12n3;
  case IdentityName::formula01:
  case IdentityName::formula02:
    return k12n;
  case IdentityName::formula1a:
  case IdentityName::formula1b:
    return k123n;
  case IdentityName::FplusF:
  case IdentityName::L1_2:
    return nnn;
  case IdentityName::FourPlusF:
    return kn;
  case IdentityName::RsumF:
    return un;
  case IdentityName::R12sums:
    return tele;
  case IdentityName::L1_1:
  case IdentityName::L1_1_printed:
    return diag;
  case IdentityName::L1_3:
    return k1n;
  }
  return nnn;
}

std::map<std::string, IntRange> default_ranges(IdentityName n) {
  const IntRange idx = r(-4, 4);
  const IntRange k = r(1, 4);
  switch (n) {
  case IdentityName::formula0:
    return {{"k1", k}, {"k2", k}, {"n3", idx}};
  case IdentityName::formula01:
    return {{"k1", k}, {"k2", k}, {"n1", r(1, 4)}, {"n2", idx}, {"n3", idx}};
  case IdentityName::formula02:
    return {{"k1", k}, {"k2", k}, {"n1", idx}, {"n2", r(1, 4)}, {"n3", idx}};
  case IdentityName::formula1a:
  case IdentityName::formula1b:
    return {{"k1", k}, {"k2", k}, {"k3", k}, {"n1", r(0, 4)}, {"n2", idx}, {"n3", idx}};
  case IdentityName::FplusF:
    return {{"n1", r(0, 4)}, {"n2", idx}, {"n3", idx}};
  case IdentityName::FourPlusF:
    return {{"k", idx}, {"n1", r(0, 4)}, {"n2", idx}, {"n3", idx}};
  case IdentityName::RsumF:
    return {{"u", r(0, 4)}, {"n1", idx}, {"n2", idx}, {"n3", idx}};
  case IdentityName::R12sums:
    return {{"u0", idx}, {"u1", idx}, {"c", idx}, {"n1", idx}, {"n2", idx}, {"n3", idx}};
  case IdentityName::L1_1:
  case IdentityName::L1_1_printed:
    return {{"u0", idx}, {"u1", idx}, {"n1", idx}, {"n2", idx}};
  case IdentityName::L1_2:
    return {{"n1", r(0, 4)}, {"n2", idx}, {"n3", idx}};
  case IdentityName::L1_3:
    return {{"k1", k}, {"n1", r(0, 4)}, {"n2", idx}, {"n3", idx}};
  }
  return {};
}

bool within_hypotheses(IdentityName n, const IdentityParams& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    return it == params.end() ? Index{0} : it->second;
  };
  switch (n) {
  case IdentityName::formula01:
    return get("n1") >= 1;
  case IdentityName::formula02:
    return get("n2") >= 1;
  case IdentityName::formula1a:
  case IdentityName::formula1b:
  case IdentityName::FplusF:
  case IdentityName::FourPlusF:
  case IdentityName::L1_2:
  case IdentityName::L1_3:
    return get("n1") >= 0;
  case IdentityName::RsumF:
    return get("u") >= 0;
  case IdentityName::R12sums:
    return get("u1") >= get("u0") && get("u0") + get("c") >= 0;
  case IdentityName::L1_1:
  case IdentityName::L1_1_printed:
    return get("u0") <= get("u1");
  case IdentityName::formula0:
    return true;
  }
  return true;
}

ZeroWitness check_identity(const IdentityId& id) {
  const Params p(id.name, id.params);
  for (const auto& key : identity_parameters(id.name))
    (void)p(key);
  if (!within_hypotheses(id.name, id.params))
    throw OutOfRange("parameters violate the hypotheses of " +
                     std::string(identity_name(id.name)));
  switch (id.name) {
  case IdentityName::formula0:
    return formula0(p);
  case IdentityName::formula01:
    return formula01(p);
  case IdentityName::formula02:
    return formula02(p);
  case IdentityName::formula1a:
    return formula1a(p);
  case IdentityName::formula1b:
    return formula1b(p);
  case IdentityName::FplusF:
    return fplusf(p);
  case IdentityName::FourPlusF:
    return fourplusf(p);
  case IdentityName::RsumF:
    return rsumf(p);
  case IdentityName::R12sums:
    return r12sums(p);
  case IdentityName::L1_1:
    return l1_1(p, false);
  case IdentityName::L1_1_printed:
    return l1_1(p, true);
  case IdentityName::L1_2:
    return l1_2(p);
  case IdentityName::L1_3:
    return l1_3(p);
  }
  return {};
}

SweepReport sweep(IdentityName n, const std::map<std::string, IntRange>& ranges, unsigned jobs) {
  const auto& keys = identity_parameters(n);
  auto box = default_ranges(n);
  for (const auto& [key, range] : ranges) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw OutOfRange("identity " + std::string(identity_name(n)) + " has no parameter '" +
                       key + "'");
    box[key] = range;
  }

  // Enumerate the box in lexicographic order of the parameter list.
  std::vector<IntRange> dims;
  std::size_t total = 1;
  for (const auto& key : keys) {
    dims.push_back(box.at(key));
    const IntRange& d = dims.back();
    total = d.lo <= d.hi ? total * static_cast<std::size_t>(d.hi - d.lo + 1) : 0;
  }
  std::vector<IdentityParams> instances;
  instances.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    IdentityParams ps;
    std::size_t rest = flat;
    for (std::size_t i = keys.size(); i-- > 0;) {
      const auto width = static_cast<std::size_t>(dims[i].hi - dims[i].lo + 1);
      ps[keys[i]] = dims[i].lo + static_cast<Index>(rest % width);
      rest /= width;
    }
    instances.push_back(std::move(ps));
  }

  struct Outcome {
    bool skipped = false;
    ZeroWitness witness;
  };
  std::vector<Outcome> outcomes(instances.size());
  std::vector<std::exception_ptr> errors(std::max(1u, jobs));
  auto work = [&](unsigned begin, unsigned stride) {
    try {
      for (std::size_t i = begin; i < instances.size(); i += stride) {
        if (!within_hypotheses(n, instances[i])) {
          outcomes[i].skipped = true;
          continue;
        }
        outcomes[i].witness = check_identity({n, instances[i]});
      }
    } catch (...) {
      errors[begin] = std::current_exception();
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(work, t, jobs);
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);

  SweepReport report;
  report.identity = std::string(identity_name(n));
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (outcomes[i].skipped) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (!outcomes[i].witness.zero)
      report.failures.push_back({instances[i], std::move(outcomes[i].witness.equation),
                                 std::move(outcomes[i].witness.residual)});
  }
  return report;
}

} // namespace skein
