#include <doctest.h>

#include "skein/error.hpp"
#include "skein/skein_element.hpp"
#include "support.hpp"

using namespace skein;
using test::Gen;

namespace {

LaurentPoly A(Exponent k) { return LaurentPoly::a_pow(k); }
SkeinElement mono(Index a, Index b, Index c, LaurentPoly p = 1) { return {Monomial(a, b, c), p}; }

} // namespace

TEST_CASE("normalize_index") {
  CHECK(normalize_index(-1) == NormalizedIndex{0, 0});
  CHECK(normalize_index(-2) == NormalizedIndex{-1, 0});
  CHECK(normalize_index(-5) == NormalizedIndex{-1, 3});
  CHECK(normalize_index(0) == NormalizedIndex{1, 0});
  CHECK(normalize_index(7) == NormalizedIndex{1, 7});
  for (Index n = -40; n <= -2; ++n) {
    const auto r = normalize_index(n);
    CHECK(r.sign == -1);
    CHECK(r.index == -n - 2);
  }
}

TEST_CASE("make_monomial") {
  CHECK(make_monomial(1, 0, 5) == SignedMonomial{1, Monomial(1, 0, 5)});
  CHECK(make_monomial(-1, 3, 3) == SignedMonomial{0, Monomial::empty()});
  CHECK(make_monomial(-2, -2, 0) == SignedMonomial{1, Monomial::empty()});
  CHECK(make_monomial(-3, 2, -4) == SignedMonomial{1, Monomial(1, 2, 2)});
  CHECK(make_monomial(-3, 2, 4) == SignedMonomial{-1, Monomial(1, 2, 4)});
  CHECK_THROWS_AS(Monomial(0, -1, 0), NegativeSupport);
}

TEST_CASE("make_monomial agrees with the extended Chebyshev recurrence") {
  for (Index i1 = -8; i1 <= 8; ++i1)
    for (Index i2 = -8; i2 <= 8; ++i2)
      for (Index i3 = -8; i3 <= 8; ++i3) {
        const auto sm = make_monomial(i1, i2, i3);
        SkeinElement e;
        if (sm.sign != 0)
          e.add_term(sm.mono, LaurentPoly(sm.sign));
        CHECK(test::poly_oracle(e) == test::oracle_term<LaurentPoly>(i1, i2, i3, 1));
      }
}

TEST_CASE("module operations") {
  Gen g(3);
  const SkeinElement e = g.element(6, 5);
  CHECK((e + (-e)).is_zero());
  CHECK((e - e).is_zero());
  CHECK(elem_scale(e, 0).is_zero());
  CHECK(elem_scale(e, 1) == e);
  CHECK(elem_add(e, SkeinElement()) == e);

  const SkeinElement loop = elem_scale(SkeinElement::empty_link(), -A(2) - A(-2));
  CHECK(loop == mono(0, 0, 0, -A(2) - A(-2)));

  SkeinElement f;
  f.add_term(-4, 0, 1, A(1)); // -S_2 S_0 S_1
  f.add_term(2, 0, 1, A(1));
  CHECK(f.is_zero());
  f.add_term(3, -1, 0, A(5));
  CHECK(f.is_zero());
  f.add_term(Monomial(1, 1, 1), LaurentPoly());
  CHECK(f.is_zero());
  CHECK(mono(1, 2, 3).swap12() == mono(2, 1, 3));
}

TEST_CASE("cheb_linearize") {
  CHECK(cheb_linearize(1, 1) == std::vector<Index>{2, 0});
  CHECK(cheb_linearize(5, 0) == std::vector<Index>{5});
  CHECK(cheb_linearize(0, 4) == std::vector<Index>{4});
  CHECK(cheb_linearize(2, 1) == std::vector<Index>{3, 1});
  CHECK(cheb_linearize(3, 5) == std::vector<Index>{8, 6, 4, 2});
  // S_2 S_1 = (x^2 - 1) x = S_3 + S_1, checked through the polynomial model
  const auto lhs = test::tri_mul(test::oracle_term<long long>(2, 0, 0, 1),
                                 test::oracle_term<long long>(1, 0, 0, 1));
  auto rhs = test::oracle_term<long long>(3, 0, 0, 1);
  for (const auto& [k, c] : test::oracle_term<long long>(1, 0, 0, 1))
    test::tri_add(rhs, k, c);
  CHECK(lhs == rhs);
}

TEST_CASE("poly_oracle examples") {
  using K = std::array<int, 3>;
  CHECK(test::poly_oracle(mono(1, 0, 0)) == test::TriPoly<LaurentPoly>{{K{1, 0, 0}, 1}});
  CHECK(test::poly_oracle(mono(2, 0, 0)) ==
        test::TriPoly<LaurentPoly>{{K{0, 0, 0}, -1}, {K{2, 0, 0}, 1}});
  CHECK(test::poly_oracle(SkeinElement::empty_link()) ==
        test::TriPoly<LaurentPoly>{{K{0, 0, 0}, 1}});
}

TEST_CASE("elem_mul examples") {
  CHECK(elem_mul(mono(1, 0, 0), mono(0, 0, 4)) == mono(1, 0, 4));
  CHECK(elem_mul(mono(1, 0, 0), mono(1, 0, 0)) == mono(2, 0, 0) + mono(0, 0, 0));
  CHECK(elem_mul(mono(2, 1, 0), mono(1, 0, 0)) == mono(3, 1, 0) + mono(1, 1, 0));
  CHECK(elem_mul(mono(2, 1, 0, A(3)), mono(1, 0, 0, A(-1))) ==
        mono(3, 1, 0, A(2)) + mono(1, 1, 0, A(2)));
  CHECK(elem_mul(SkeinElement(), mono(1, 1, 1)).is_zero());
}

TEST_CASE("elem_mul is a commutative associative unital product") {
  Gen g(4);
  for (int t = 0; t < 60; ++t) {
    const auto e = g.element(4, 6), f = g.element(4, 6), h = g.element(3, 6);
    const auto ef = elem_mul(e, f);
    CHECK(ef == elem_mul(f, e));
    CHECK(elem_mul(ef, h) == elem_mul(e, elem_mul(f, h)));
    CHECK(elem_mul(SkeinElement::empty_link(), e) == e);
    CHECK(elem_mul(e, SkeinElement::empty_link()) == e);
    CHECK(test::poly_oracle(ef) == test::tri_mul(test::poly_oracle(e), test::poly_oracle(f)));
  }
}
