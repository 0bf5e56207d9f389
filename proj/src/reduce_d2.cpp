#include "skein/reduce_d2.hpp"

#include <algorithm>
#include <tuple>

#include "skein/error.hpp"

namespace skein {

namespace {

void require_d2(const SurgeryParams& k) {
  if (k.k1 < 1 || k.k2 < 1)
    throw InvalidParams("D^2 reduction needs k1, k2 >= 1 (got k1=" + std::to_string(k.k1) +
                        ", k2=" + std::to_string(k.k2) + ")");
}

RegionTag region_sorted(Index n1, Index n2, Index k1, Index k2) {
  if (n1 > k1)
    return RegionTag::Region1;
  if (2 * n1 > k1)
    return 2 * n2 > k2 ? RegionTag::Region2 : RegionTag::InBasis;
  if (2 * n1 == k1 && 2 * n2 == k2)
    return RegionTag::InBasis; // fixed point: its relator vanishes
  return 2 * n2 >= k2 ? RegionTag::Region3 : RegionTag::InBasis;
}

bool in_g(const Monomial& m, Index k1, Index k2) {
  return region_sorted(m.l1(), m.l2(), k1, k2) == RegionTag::InBasis;
}

D2Result reduce_sorted(SkeinElement e, Index k1, Index k2, const ReduceOptions& opt) {
  const auto k = SurgeryParams::d2(k1, k2);
  Certificate cert;

  // Phase 1: push n1 down to k1, largest (n1, n2, n3) first.
  while (!e.is_zero() && e.terms().rbegin()->first.l1() > k1) {
    const Monomial pivot = e.terms().rbegin()->first;
    const SkeinElement r = detail::cancel_with(
        e, pivot, {RelatorFamily::R12, pivot.l1(), pivot.l2(), pivot.l3(), k}, cert);
    for (const auto& [m, c] : r.terms())
      if (m != pivot && m.l1() >= pivot.l1())
        throw NonTermination("phase 1 pivot " + pivot.to_string() + " produced " + m.to_string());
    detail::check_size(e, opt);
  }

  // Phase 2: clear the strip above G, largest (n2, n1, n3) first.
  auto key = [](const Monomial& m) { return std::tuple(m.l2(), m.l1(), m.l3()); };
  while (true) {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : e.terms())
      if (!in_g(m, k1, k2) && (!best || key(m) > key(*best)))
        best = &m;
    if (!best)
      break;
    const Monomial pivot = *best;
    const SkeinElement r = detail::cancel_with(
        e, pivot, {RelatorFamily::R12, pivot.l1(), pivot.l2(), pivot.l3(), k}, cert);
    for (const auto& [m, c] : r.terms())
      if (m != pivot && (m.l1() > k1 || (m.l2() >= pivot.l2() && !in_g(m, k1, k2))))
        throw NonTermination("phase 2 pivot " + pivot.to_string() + " produced " + m.to_string());
    detail::check_size(e, opt);
  }
  return {std::move(e), std::move(cert)};
}

} // namespace

namespace detail {

SkeinElement cancel_with(SkeinElement& e, const Monomial& pivot, const RelatorId& id,
                         Certificate& cert) {
  SkeinElement r = relator(id);
  const Exponent lead = leading_exponent(id.family, id.n1, id.n2, id.n3);
  if (r.coeff(pivot) != LaurentPoly::monomial(-1, lead))
    throw NonTermination(id.to_string() + " does not lead with -A^" + std::to_string(lead) +
                         " at " + pivot.to_string());
  const LaurentPoly coeff = e.coeff(pivot).shifted(checked_sub(0, lead));
  e.add_scaled(r, coeff);
  cert.steps.push_back({id, -coeff});
  return r;
}

void check_size(const SkeinElement& e, const ReduceOptions& opt) {
  if (e.size() > opt.max_terms)
    throw TermLimitExceeded("intermediate element has " + std::to_string(e.size()) +
                            " terms, over the limit of " + std::to_string(opt.max_terms));
}

} // namespace detail

std::string_view region_name(RegionTag t) {
  switch (t) {
  case RegionTag::InBasis:
    return "InBasis";
  case RegionTag::Region1:
    return "Region1";
  case RegionTag::Region2:
    return "Region2";
  case RegionTag::Region3:
    return "Region3";
  }
  return "?";
}

RegionTag region_of(const Monomial& m, const SurgeryParams& k) {
  require_d2(k);
  if (k.k1 > k.k2)
    return region_sorted(m.l2(), m.l1(), k.k2, k.k1);
  return region_sorted(m.l1(), m.l2(), k.k1, k.k2);
}

D2Result reduce_d2(const SkeinElement& e, const SurgeryParams& k, const ReduceOptions& opt) {
  require_d2(k);
  if (k.k1 <= k.k2)
    return reduce_sorted(e, k.k1, k.k2, opt);

  D2Result swapped = reduce_sorted(e.swap12(), k.k2, k.k1, opt);
  D2Result out{swapped.normal.swap12(), {}};
  for (auto& step : swapped.cert.steps)
    out.cert.steps.push_back(
        {{RelatorFamily::R12, step.id.n2, step.id.n1, step.id.n3, SurgeryParams::d2(k.k1, k.k2)},
         std::move(step.coeff)});
  return out;
}

std::vector<Monomial> enumerate_basis(const SurgeryParams& k, Index n3_max) {
  require_d2(k);
  std::vector<Monomial> out;
  const Index lim = std::max(k.k1, k.k2);
  for (Index a = 0; a <= lim; ++a)
    for (Index b = 0; b <= lim; ++b)
      for (Index c = 0; c <= n3_max; ++c) {
        Monomial m(a, b, c);
        if (in_basis(m, k))
          out.push_back(m);
      }
  return out;
}

} // namespace skein
