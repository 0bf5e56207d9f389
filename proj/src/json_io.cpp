#include "skein/json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "skein/error.hpp"

namespace skein {

namespace {

Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
      throw ParseError(what + ": '" + s + "' is not a decimal integer");
    return Integer(s);
  }
  throw ParseError(what + " must be an integer, got " + std::string(j.type_name()) +
                   (j.is_number_float() ? " (floats are not accepted)" : ""));
}

std::int64_t int64_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw ParseError(what + " must be an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw ParseError(what + " is out of range");
  return j.get<std::int64_t>();
}

Exponent exponent_from_key(const std::string& key) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (key.empty() || pos != key.size() || std::isspace(static_cast<unsigned char>(key[0])) ||
      key[0] == '+')
    throw ParseError("exponent key '" + key + "' is not an integer");
  return v;
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(where + " is missing \"" + key + "\"");
  return *it;
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys)
      known = known || k == allowed;
    if (!known)
      throw ParseError(where + " has unexpected key \"" + k + "\"");
  }
}

std::vector<Index> index_list(const Json& j, const std::string& what) {
  if (!j.is_array())
    throw ParseError(what + " must be an array");
  std::vector<Index> out;
  for (const auto& x : j)
    out.push_back(int64_from_json(x, what));
  return out;
}

Json params_to_json(const IdentityParams& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p)
    j[k] = v;
  return j;
}

} // namespace

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [k, c] : p.terms())
    j[std::to_string(k)] = integer_to_json(c);
  return j;
}

Json to_json(const Eisenstein& z) {
  Json j;
  j["a"] = integer_to_json(z.a);
  j["b"] = integer_to_json(z.b);
  return j;
}

Json to_json(const SkeinElement& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back({{"monomial", {m.l1(), m.l2(), m.l3()}}, {"coeff", to_json(c)}});
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const Certificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json k = {s.id.params.k1, s.id.params.k2};
    if (s.id.params.k3)
      k.push_back(*s.id.params.k3);
    Json step;
    step["family"] = family_code(s.id.family);
    step["n"] = {s.id.n1, s.id.n2, s.id.n3};
    step["k"] = std::move(k);
    step["coeff"] = to_json(s.coeff);
    steps.push_back(std::move(step));
  }
  Json j;
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const SweepReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json x;
    x["params"] = params_to_json(f.params);
    x["equation"] = f.equation;
    x["residual"] = to_json(f.residual);
    failures.push_back(std::move(x));
  }
  Json j;
  j["identity"] = r.identity;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  j["ok"] = r.ok();
  j["failures"] = std::move(failures);
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object())
    throw ParseError("polynomial must be an object mapping exponents to integers");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [k, v] : j.items()) {
    Integer c = integer_from_json(v, "coefficient of A^" + k);
    if (c == 0)
      throw ParseError("coefficient of A^" + k + " is zero");
    terms.emplace_back(exponent_from_key(k), std::move(c));
  }
  std::set<Exponent> seen;
  for (const auto& [k, c] : terms)
    if (!seen.insert(k).second)
      throw ParseError("exponent " + std::to_string(k) + " appears twice");
  return LaurentPoly::from_terms(std::move(terms));
}

Eisenstein eisenstein_from_json(const Json& j) {
  if (!j.is_object())
    throw ParseError("Eisenstein integer must be an object {\"a\", \"b\"}");
  only_keys(j, {"a", "b"}, "Eisenstein integer");
  return {integer_from_json(field(j, "a", "Eisenstein integer"), "a"),
          integer_from_json(field(j, "b", "Eisenstein integer"), "b")};
}

SkeinElement element_from_json(const Json& j) {
  if (!j.is_object())
    throw ParseError("element must be an object with a \"terms\" array");
  only_keys(j, {"terms"}, "element");
  const Json& terms = field(j, "terms", "element");
  if (!terms.is_array())
    throw ParseError("\"terms\" must be an array");
  SkeinElement e;
  std::size_t i = 0;
  for (const auto& t : terms) {
    const std::string where = "term " + std::to_string(i++);
    if (!t.is_object())
      throw ParseError(where + " must be an object");
    only_keys(t, {"monomial", "coeff"}, where);
    const auto deg = index_list(field(t, "monomial", where), where + " monomial");
    if (deg.size() != 3)
      throw ParseError(where + " monomial must have three degrees");
    for (Index d : deg)
      if (d < 0)
        throw ParseError(where + " monomial has a negative degree");
    const Monomial m(deg[0], deg[1], deg[2]);
    LaurentPoly c = poly_from_json(field(t, "coeff", where));
    if (c.is_zero())
      throw ParseError(where + " has a zero coefficient");
    if (!e.coeff(m).is_zero())
      throw ParseError(where + " repeats monomial " + m.to_string());
    e.add_term(m, c);
  }
  return e;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object())
    throw ParseError("certificate must be an object with a \"steps\" array");
  only_keys(j, {"steps"}, "certificate");
  const Json& steps = field(j, "steps", "certificate");
  if (!steps.is_array())
    throw ParseError("\"steps\" must be an array");
  Certificate cert;
  std::size_t i = 0;
  for (const auto& s : steps) {
    const std::string where = "step " + std::to_string(i++);
    if (!s.is_object())
      throw ParseError(where + " must be an object");
    only_keys(s, {"family", "n", "k", "coeff"}, where);
    RelatorId id;
    try {
      id.family = family_from_int(static_cast<int>(int64_from_json(field(s, "family", where), where)));
    } catch (const InvalidParams& e) {
      throw ParseError(where + ": " + e.what());
    }
    const auto n = index_list(field(s, "n", where), where + " n");
    const auto k = index_list(field(s, "k", where), where + " k");
    if (n.size() != 3)
      throw ParseError(where + " n must have three entries");
    if (k.size() != 2 && k.size() != 3)
      throw ParseError(where + " k must have two or three entries");
    if (id.family != RelatorFamily::R12 && k.size() != 3)
      throw ParseError(where + " family " + std::to_string(family_code(id.family)) +
                       " needs three surgery coefficients");
    id.n1 = n[0];
    id.n2 = n[1];
    id.n3 = n[2];
    id.params = k.size() == 3 ? SurgeryParams::s2(k[0], k[1], k[2]) : SurgeryParams::d2(k[0], k[1]);
    cert.steps.push_back({id, poly_from_json(field(s, "coeff", where))});
  }
  return cert;
}

Json parse_json(const std::string& text) {
  // Stack of key sets, one per open object, to catch duplicate keys that
  // the DOM would otherwise silently collapse.
  std::vector<std::set<std::string>> open;
  std::string duplicate;
  auto cb = [&](int, Json::parse_event_t ev, Json& parsed) {
    switch (ev) {
    case Json::parse_event_t::object_start:
      open.emplace_back();
      break;
    case Json::parse_event_t::object_end:
      open.pop_back();
      break;
    case Json::parse_event_t::key:
      if (!open.back().insert(parsed.get<std::string>()).second && duplicate.empty())
        duplicate = parsed.get<std::string>();
      break;
    default:
      break;
    }
    return true;
  };
  Json j;
  try {
    j = Json::parse(text, cb);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!duplicate.empty())
    throw ParseError("duplicate key \"" + duplicate + "\"");
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

} // namespace skein
