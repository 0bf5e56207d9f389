#include <doctest.h>

#include "skein/error.hpp"
#include "skein/relators.hpp"
#include "support.hpp"

using namespace skein;

namespace {

LaurentPoly A(Exponent k) { return LaurentPoly::a_pow(k); }
SkeinElement mono(Index a, Index b, Index c, LaurentPoly p = 1) { return {Monomial(a, b, c), p}; }
SkeinElement s1(Index l) { return mono(l, 0, 0); }
SkeinElement s2(Index l) { return mono(0, l, 0); }

// Generic term-by-term expansion of a printed four-term closed form, with
// Chebyshev signs taken from the polynomial model instead of the library's
// normalization. Compared through poly_oracle.
test::TriPoly<LaurentPoly> model(std::array<std::array<Index, 3>, 4> idx,
                                 std::array<Exponent, 4> exps) {
  test::TriPoly<LaurentPoly> out;
  for (int t = 0; t < 4; ++t)
    for (const auto& [k, v] : test::oracle_term<LaurentPoly>(idx[t][0], idx[t][1], idx[t][2],
                                                             LaurentPoly::monomial(-1, exps[t])))
      test::tri_add(out, k, v);
  return out;
}

} // namespace

TEST_CASE("closed-form examples") {
  for (Index n3 = 0; n3 <= 7; ++n3) {
    CHECK(r12_closed(1, 0, n3) == mono(1, 0, n3, -A(-3)));
    CHECK(r12_closed(0, 1, n3) == mono(0, 1, n3, -A(-3)));
    CHECK(r12_closed(0, 0, n3) == mono(0, 0, n3, -A(2) - A(-2)));
  }
  CHECK(r12_closed(1, 1, 0) == mono(1, 1, 0, -A(-4)) + mono(0, 0, 1, -A(-2)));
  CHECK(r13_closed(0, 5, 0) == mono(0, 5, 0, -A(2) - A(-2)));
  CHECK(r23_closed(0, 1, 0) == mono(0, 1, 0, -A(-3)));
  CHECK(r13_closed(1, 0, 1) == mono(1, 0, 1, -A(-4)) + mono(0, 1, 0, -A(-2)));
  CHECK(closed_form(RelatorFamily::R23, 2, 3, 1) == r23_closed(2, 3, 1));
}

TEST_CASE("closed forms match the printed expansions for all small indices") {
  for (Index a = -4; a <= 4; ++a)
    for (Index b = -4; b <= 4; ++b)
      for (Index c = -4; c <= 4; ++c) {
        CHECK(test::poly_oracle(r12_closed(a, b, c)) ==
              model({{{a, b, c}, {a - 2, b - 2, c}, {a - 1, b - 1, c + 1}, {a - 1, b - 1, c - 1}}},
                    {-a - b - 2, -a - b + 2, -a - b, -a - b}));
        CHECK(test::poly_oracle(r13_closed(a, b, c)) ==
              model({{{a, b, c}, {a - 2, b, c - 2}, {a - 1, b + 1, c - 1}, {a - 1, b - 1, c - 1}}},
                    {-a - c - 2, -a - c + 2, -a - c, -a - c}));
        CHECK(test::poly_oracle(r23_closed(a, b, c)) ==
              model({{{a, b, c}, {a, b - 2, c - 2}, {a + 1, b - 1, c - 1}, {a - 1, b - 1, c - 1}}},
                    {-b - c - 2, -b - c + 2, -b - c, -b - c}));
      }
}

TEST_CASE("relator examples") {
  const auto k11 = SurgeryParams::d2(1, 1);
  CHECK(relator(RelatorFamily::R12, 1, 0, 0, k11) == mono(1, 0, 0, -A(-3)) + mono(0, 1, 0, A(-3)));
  CHECK(relator(RelatorFamily::R12, 0, 0, -1, k11).is_zero());
  for (Index k1 : {2, 4})
    for (Index k2 : {2, 4, 6})
      for (Index n3 = -3; n3 <= 6; ++n3)
        CHECK(relator(RelatorFamily::R12, k1 / 2, k2 / 2, n3, SurgeryParams::d2(k1, k2)).is_zero());
  const RelatorId id{RelatorFamily::R13, 1, 2, 3, SurgeryParams::s2(2, 3, 4)};
  CHECK(relator(id) == r13_closed(1, 2, 3) - r13_closed(1, 2, 1));
  CHECK(relator({RelatorFamily::R23, 1, 2, 3, SurgeryParams::s2(2, 3, 4)}) ==
        r23_closed(1, 2, 3) - r23_closed(1, 1, 1));
  CHECK_THROWS_AS(relator(RelatorFamily::R13, 0, 0, 0, k11), InvalidParams);
  CHECK_THROWS_AS(family_from_int(14), InvalidParams);
  CHECK(id.to_string() == "R13^{1,2,3} k=(2,3,4)");
}

TEST_CASE("reflection identities of family 12") {
  for (Index k1 = 1; k1 <= 4; ++k1)
    for (Index k2 = k1; k2 <= 4; ++k2) {
      const auto k = SurgeryParams::d2(k1, k2);
      for (Index a = -4; a <= 4; ++a)
        for (Index b = -4; b <= 4; ++b)
          for (Index c = -4; c <= 4; ++c) {
            const auto r = relator(RelatorFamily::R12, a, b, c, k);
            CHECK((r + relator(RelatorFamily::R12, k1 - a, k2 - b, c, k)).is_zero());
            CHECK((r + relator(RelatorFamily::R12, a, b, -c - 2, k)).is_zero());
          }
    }
}

TEST_CASE("leading coefficient away from the reflection centre") {
  const auto k = SurgeryParams::s2(2, 3, 4);
  for (auto f : {RelatorFamily::R12, RelatorFamily::R13, RelatorFamily::R23})
    for (Index a = 0; a <= 6; ++a)
      for (Index b = 0; b <= 6; ++b)
        for (Index c = 0; c <= 6; ++c) {
          const Index first = f == RelatorFamily::R23 ? b : a;
          const Index kfirst = f == RelatorFamily::R23 ? 3 : 2;
          if (first <= kfirst)
            continue;
          CHECK(relator(f, a, b, c, k).coeff(Monomial(a, b, c)) ==
                LaurentPoly::monomial(-1, leading_exponent(f, a, b, c)));
        }
}

TEST_CASE("two-strand recurrences through the product") {
  for (Index l = 0; l <= 4; ++l)
    for (Index a = -4; a <= 4; ++a)
      for (Index b = -4; b <= 4; ++b)
        for (Index c = 0; c <= 4; ++c) {
          const auto lhs = r12_closed(a, b, c);
          const auto t = [&](const SkeinElement& s, Exponent e, const SkeinElement& r) {
            return elem_scale(elem_mul(s, r), A(e));
          };
          const SkeinElement s1m = l >= 1 ? s1(l - 1) : SkeinElement();
          const SkeinElement s2m = l >= 1 ? s2(l - 1) : SkeinElement();
          CHECK(lhs == t(s1(l), -l, r12_closed(a - l, b, c)) - t(s1m, -l - 1, r12_closed(a - l - 1, b, c)));
          CHECK(lhs == t(s1(l), l, r12_closed(a + l, b, c)) - t(s1m, l + 1, r12_closed(a + l + 1, b, c)));
          CHECK(lhs == t(s2(l), -l, r12_closed(a, b - l, c)) - t(s2m, -l - 1, r12_closed(a, b - l - 1, c)));
          CHECK(lhs == t(s2(l), l, r12_closed(a, b + l, c)) - t(s2m, l + 1, r12_closed(a, b + l + 1, c)));
        }
}

TEST_CASE("summation families") {
  CHECK(f_sum(1, 2, 2, 0) == mono(2, 2, 0, -A(-6)) + mono(2, 2, 2, -A(-6)) + mono(1, 1, 1, -A(-4)));
  for (Index a = 0; a <= 3; ++a)
    for (Index b = 0; b <= 3; ++b)
      for (Index c = 0; c <= 3; ++c) {
        CHECK(f_sum(0, a, b, c) == mono(a, b, c, -A(-a - b - 2)));
        SkeinElement only;
        only.add_term(a - 1, b - 1, c - 1, -A(-a - b));
        CHECK(f_tilde_sum(-1, a, b, c) == only);
      }
  CHECK(f_sum(-1, 3, 3, 3).is_zero());
  CHECK(f_tilde_sum(-2, 3, 3, 3).is_zero());
}

TEST_CASE("R12 sums decompose into summation families") {
  for (Index u = 0; u <= 4; ++u)
    for (Index a = -4; a <= 4; ++a)
      for (Index b = -4; b <= 4; ++b)
        for (Index c = -4; c <= 4; ++c) {
          SkeinElement sum;
          for (Index j = 0; j <= u; ++j)
            sum += r12_closed(a, b, c + 2 * j);
          CHECK(sum == f_sum(u, a, b, c) + f_sum(u + 1, a - 1, b - 1, c - 1));
          CHECK(sum == f_tilde_sum(u, a, b, c) + f_tilde_sum(u - 1, a - 1, b - 1, c + 1));
        }
}
