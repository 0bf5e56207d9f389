#include "skein/reduce_s2.hpp"

#include <tuple>

#include "skein/error.hpp"

namespace skein {

namespace {

SurgeryParams require_s2(const SurgeryParams& k) {
  const Index k3 = k.require_k3();
  if (k.k1 < 2 || k.k2 < 2 || k3 < 2)
    throw InvalidParams("S^2 reduction needs k1, k2, k3 >= 2 (got " + std::to_string(k.k1) +
                        ", " + std::to_string(k.k2) + ", " + std::to_string(k3) + ")");
  return SurgeryParams::s2(k.k1, k.k2, k3);
}

// Largest term by (n3, n1, n2) among those matching pred.
template <class Pred>
const Monomial* top_by_n3(const SkeinElement& e, Pred pred) {
  auto key = [](const Monomial& m) { return std::tuple(m.l3(), m.l1(), m.l2()); };
  const Monomial* best = nullptr;
  for (const auto& [m, c] : e.terms())
    if (pred(m) && (!best || key(m) > key(*best)))
      best = &m;
  return best;
}

} // namespace

S2Result reduce_s2(const SkeinElement& e, const SurgeryParams& params, const ReduceOptions& opt) {
  const SurgeryParams k = require_s2(params);
  const Index k1 = k.k1, k2 = k.k2, k3 = *k.k3;

  D2Result d2 = reduce_d2(e, SurgeryParams::d2(k1, k2), opt);
  SkeinElement cur = std::move(d2.normal);
  Certificate cert;
  for (auto& step : d2.cert.steps) {
    step.id.params = k;
    cert.steps.push_back(std::move(step));
  }

  // Lower the largest n3 with a family-23 relator, then clear the n1
  // overflow that step creates with family-13 relators.
  while (const Monomial* top = top_by_n3(cur, [&](const Monomial& m) { return m.l3() > k3; })) {
    const Monomial pivot = *top;
    const SkeinElement r = detail::cancel_with(
        cur, pivot, {RelatorFamily::R23, pivot.l1(), pivot.l2(), pivot.l3(), k}, cert);
    for (const auto& [m, c] : r.terms())
      if (m != pivot && m.l3() >= pivot.l3())
        throw NonTermination("R23 pivot " + pivot.to_string() + " produced " + m.to_string());
    detail::check_size(cur, opt);

    while (const Monomial* over = top_by_n3(cur, [&](const Monomial& m) { return m.l1() > k1; })) {
      const Monomial x = *over;
      const SkeinElement r13 =
          detail::cancel_with(cur, x, {RelatorFamily::R13, x.l1(), x.l2(), x.l3(), k}, cert);
      for (const auto& [m, c] : r13.terms())
        if (m != x && (m.l3() >= pivot.l3() || m.l2() > k2 || m.l1() > k1))
          throw NonTermination("R13 pivot " + x.to_string() + " produced " + m.to_string());
      detail::check_size(cur, opt);
    }
  }

  for (const auto& [m, c] : cur.terms())
    if (m.l1() > k1 || m.l2() > k2 || m.l3() > k3)
      throw NonTermination("S^2 reduction left " + m.to_string() + " outside the box");
  return {{std::move(cur), {k1, k2, k3}}, std::move(cert)};
}

std::vector<Monomial> generators(const SurgeryParams& params) {
  const SurgeryParams k = require_s2(params);
  std::vector<Monomial> out;
  for (Index a = 0; a <= k.k1; ++a)
    for (Index b = 0; b <= k.k2; ++b)
      for (Index c = 0; c <= *k.k3; ++c)
        out.emplace_back(a, b, c);
  return out;
}

} // namespace skein
