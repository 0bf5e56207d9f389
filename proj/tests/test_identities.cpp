#include <doctest.h>

#include "skein/error.hpp"
#include "skein/identities.hpp"
#include "skein/relators.hpp"
#include "support.hpp"

using namespace skein;

namespace {

std::map<std::string, IntRange> box(std::initializer_list<std::pair<const std::string, IntRange>> l) {
  return l;
}

} // namespace

TEST_CASE("identity names round-trip") {
  for (auto n : all_identities(true))
    CHECK(identity_from_name(identity_name(n)) == n);
  CHECK(all_identities().size() == 12);
  CHECK(all_identities(true).size() == 13);
  CHECK_THROWS_AS(identity_from_name("formula9"), OutOfRange);
}

TEST_CASE("single instances") {
  CHECK(check_identity({IdentityName::formula0, {{"k1", 1}, {"k2", 1}, {"n3", 0}}}).zero);
  for (Index n2 = -3; n2 <= 3; ++n2)
    for (Index n3 = -3; n3 <= 3; ++n3) {
      IdentityParams p{{"k1", 2}, {"k2", 3}, {"k3", 4}, {"n1", 0}, {"n2", n2}, {"n3", n3}};
      CHECK(check_identity({IdentityName::formula1a, p}).zero);
      CHECK(check_identity({IdentityName::formula1b, p}).zero);
    }
  CHECK(check_identity({IdentityName::R12sums,
                        {{"u0", 0}, {"u1", 0}, {"c", 0}, {"n1", 2}, {"n2", 1}, {"n3", 0}}})
            .zero);
}

TEST_CASE("R12sums base case is a single closed form") {
  // u0 = u1 = c = 0: the double sum is R12(n); the right side is F_0 + F_1 shifted.
  for (Index a = -3; a <= 3; ++a)
    for (Index b = -3; b <= 3; ++b)
      for (Index c = -3; c <= 3; ++c)
        CHECK(r12_closed(a, b, c) == f_sum(0, a, b, c) + f_sum(1, a - 1, b - 1, c - 1));
}

TEST_CASE("hypotheses and missing parameters") {
  CHECK_THROWS_AS(check_identity({IdentityName::formula01,
                                  {{"k1", 1}, {"k2", 1}, {"n1", 0}, {"n2", 0}, {"n3", 0}}}),
                  OutOfRange);
  CHECK_THROWS_AS(check_identity({IdentityName::L1_1, {{"u0", 2}, {"u1", 1}, {"n1", 0}, {"n2", 0}}}),
                  OutOfRange);
  CHECK_THROWS_AS(check_identity({IdentityName::R12sums,
                                  {{"u0", 1}, {"u1", 2}, {"c", -2}, {"n1", 0}, {"n2", 0}, {"n3", 0}}}),
                  OutOfRange);
  CHECK_THROWS_AS(check_identity({IdentityName::formula0, {{"k1", 1}, {"k2", 1}}}), OutOfRange);
  CHECK_THROWS_AS(sweep(IdentityName::formula0, box({{"zz", {0, 1}}})), OutOfRange);
}

TEST_CASE("sweep examples") {
  auto r = sweep(IdentityName::formula0, box({{"k1", {1, 4}}, {"k2", {1, 4}}, {"n3", {0, 4}}}));
  CHECK(r.ok());
  CHECK(r.checked == 80);
  r = sweep(IdentityName::formula01, box({{"k1", {1, 3}}, {"k2", {1, 3}}, {"n1", {1, 3}},
                                          {"n2", {0, 3}}, {"n3", {0, 3}}}));
  CHECK(r.ok());
  CHECK(r.checked == 432);
  r = sweep(IdentityName::FplusF, box({{"n1", {0, 4}}, {"n2", {-3, 3}}, {"n3", {0, 3}}}));
  CHECK(r.ok());
  CHECK(r.checked == 140);

  // Out-of-hypothesis instances are skipped, not failed.
  r = sweep(IdentityName::formula01, box({{"k1", {1, 1}}, {"k2", {1, 1}}, {"n1", {-1, 1}},
                                          {"n2", {0, 0}}, {"n3", {0, 0}}}));
  CHECK(r.checked == 1);
  CHECK(r.skipped == 2);
}

TEST_CASE("printed second L1_1 equation has a nonzero residual") {
  const auto w = check_identity({IdentityName::L1_1_printed, {{"u0", 0}, {"u1", 0}, {"n1", 0}, {"n2", 0}}});
  CHECK_FALSE(w.zero);
  CHECK(w.equation == "ascending");
  CHECK(w.residual == SkeinElement(Monomial::empty(), LaurentPoly::a_pow(-2) - LaurentPoly::a_pow(2)));
  CHECK(check_identity({IdentityName::L1_1, {{"u0", 0}, {"u1", 0}, {"n1", 0}, {"n2", 0}}}).zero);
}

TEST_CASE("sweep reports do not depend on the thread count") {
  const auto ranges = box({{"u0", {-2, 2}}, {"u1", {-2, 2}}, {"n1", {-2, 2}}, {"n2", {-2, 2}}});
  const auto a = sweep(IdentityName::L1_1_printed, ranges, 1);
  const auto b = sweep(IdentityName::L1_1_printed, ranges, 4);
  CHECK(a.checked == b.checked);
  CHECK(a.skipped == b.skipped);
  REQUIRE(a.failures.size() == b.failures.size());
  CHECK(!a.failures.empty());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].params == b.failures[i].params);
    CHECK(a.failures[i].residual == b.failures[i].residual);
  }
}

TEST_CASE("every identity holds on a reduced box") {
  for (auto n : all_identities()) {
    std::map<std::string, IntRange> r;
    for (auto [key, range] : default_ranges(n))
      r[key] = {std::max<Index>(range.lo, -2), std::min<Index>(range.hi, 2)};
    const auto rep = sweep(n, r);
    INFO(identity_name(n));
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
  }
}
