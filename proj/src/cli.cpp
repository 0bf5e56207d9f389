#include "skein/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "skein/error.hpp"
#include "skein/eta.hpp"
#include "skein/json_io.hpp"
#include "skein/reduce_s2.hpp"

namespace skein::cli {

namespace {

class UsageError : public Error {
public:
  using Error::Error;
};

ReduceOptions options_from_env() {
  ReduceOptions opt;
  if (const char* v = std::getenv("SKEINCALC_MAX_TERMS")) {
    std::size_t pos = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(v, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || v[pos] != '\0' || n == 0)
      throw UsageError(std::string("SKEINCALC_MAX_TERMS must be a positive integer, got '") + v +
                       "'");
    opt.max_terms = n;
  }
  return opt;
}

SurgeryParams d2_params(const std::vector<Index>& k) {
  if (k.size() != 2)
    throw UsageError("--k takes two values K1 K2");
  return SurgeryParams::d2(k[0], k[1]);
}

SurgeryParams s2_params(const std::vector<Index>& k) {
  if (k.size() != 3)
    throw UsageError("--k takes three values K1 K2 K3");
  return SurgeryParams::s2(k[0], k[1], k[2]);
}

std::map<std::string, IntRange> parse_ranges(const std::vector<std::string>& specs) {
  std::map<std::string, IntRange> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    const auto colon = s.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || eq == 0 || colon == std::string::npos)
      throw UsageError("--range expects key=lo:hi, got '" + s + "'");
    IntRange r;
    try {
      std::size_t p1 = 0, p2 = 0;
      const std::string lo = s.substr(eq + 1, colon - eq - 1), hi = s.substr(colon + 1);
      r.lo = std::stoll(lo, &p1);
      r.hi = std::stoll(hi, &p2);
      if (p1 != lo.size() || p2 != hi.size())
        throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("--range bounds must be integers, got '" + s + "'");
    }
    if (r.lo > r.hi)
      throw UsageError("--range " + s + " is empty");
    out[s.substr(0, eq)] = r;
  }
  return out;
}

SkeinElement read_element(const std::string& path) {
  try {
    return element_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    throw ParseError(msg.rfind(path, 0) == 0 ? msg : path + ": " + msg);
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f)
    throw UsageError("cannot write " + path);
  f << j.dump() << '\n';
  if (!f)
    throw UsageError("error writing " + path);
}

Json monomial_list(const std::vector<Monomial>& ms) {
  Json j = Json::array();
  for (const auto& m : ms)
    j.push_back({m.l1(), m.l2(), m.l3()});
  return j;
}

int cmd_verify(const std::string& identity, const std::vector<std::string>& range_specs,
               bool json, unsigned jobs, std::ostream& out) {
  const auto ranges = parse_ranges(range_specs);
  std::vector<IdentityName> names;
  if (identity == "all")
    names = all_identities();
  else
    try {
      names.push_back(identity_from_name(identity));
    } catch (const OutOfRange& e) {
      throw UsageError(e.what());
    }

  for (const auto& [key, r] : ranges) {
    bool used = false;
    for (auto n : names) {
      const auto& ps = identity_parameters(n);
      used = used || std::find(ps.begin(), ps.end(), key) != ps.end();
    }
    if (!used)
      throw UsageError("--range " + key + ": no selected identity has that parameter");
  }

  bool ok = true;
  Json reports = Json::array();
  for (auto n : names) {
    std::map<std::string, IntRange> mine;
    for (const auto& key : identity_parameters(n))
      if (auto it = ranges.find(key); it != ranges.end())
        mine.insert(*it);
    const SweepReport rep = sweep(n, mine, jobs);
    ok = ok && rep.ok();
    if (json) {
      reports.push_back(to_json(rep));
      continue;
    }
    out << rep.identity << ": " << rep.checked << " checked, " << rep.skipped << " skipped, "
        << rep.failures.size() << " failed\n";
    for (const auto& f : rep.failures) {
      out << "  nonzero at";
      for (const auto& [k, v] : f.params)
        out << ' ' << k << '=' << v;
      out << " (" << f.equation << "): " << f.residual.to_string() << '\n';
    }
  }
  if (json) {
    Json j;
    j["ok"] = ok;
    j["identities"] = std::move(reports);
    out << j.dump() << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Kauffman bracket skein modules of D^2(k1,k2) and "
               "S^2(k1,k2,k3)",
               "skeincalc"};
  app.require_subcommand(1);

  std::string identity = "all";
  std::vector<std::string> range_specs;
  bool as_json = false;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "check relator identities instance by instance");
  verify->add_option("--identity", identity, "identity name, or 'all'");
  verify->add_option("--range", range_specs, "parameter range key=lo:hi")->expected(1, -1);
  verify->add_flag("--json", as_json, "print a JSON report");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));

  int family = 12;
  std::vector<Index> n, k;
  auto* rel = app.add_subcommand("relator", "print one relator");
  rel->add_option("--family", family, "12, 13 or 23")->required();
  rel->add_option("--n", n, "N1 N2 N3")->required()->expected(3);
  rel->add_option("--k", k, "K1 K2 [K3]")->required()->expected(2, 3);

  std::string in_path, out_path, cert_path;
  auto* d2 = app.add_subcommand("reduce-d2", "normal form on the D^2 basis");
  d2->add_option("--k", k, "K1 K2")->required()->expected(2);
  d2->add_option("--in", in_path, "element JSON")->required();
  d2->add_option("--cert", cert_path, "write the certificate here");

  auto* s2 = app.add_subcommand("reduce-s2", "representative in the S^2 generating box");
  s2->add_option("--k", k, "K1 K2 K3")->required()->expected(3);
  s2->add_option("--in", in_path, "element JSON")->required();
  s2->add_option("--cert", cert_path, "write the certificate here");

  Index n3_max = 0;
  auto* basis = app.add_subcommand("basis", "list D^2 basis monomials");
  basis->add_option("--k", k, "K1 K2")->required()->expected(2);
  basis->add_option("--n3-max", n3_max, "largest n3")->required();

  auto* gens = app.add_subcommand("generators", "list the S^2 generating box");
  gens->add_option("--k", k, "K1 K2 K3")->required()->expected(3);

  auto* eta = app.add_subcommand("eta", "evaluate eta at A = exp(i pi/3)");
  eta->add_option("--k", k, "K1 K2 K3")->required()->expected(3);
  eta->add_option("--in", in_path, "element JSON")->required();

  auto* check = app.add_subcommand("check-cert", "verify a certificate against input and output");
  check->add_option("--in", in_path, "input element JSON")->required();
  check->add_option("--out", out_path, "output element JSON")->required();
  check->add_option("--cert", cert_path, "certificate JSON")->required();

  std::vector<std::string> argv_store{"skeincalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed())
      return cmd_verify(identity, range_specs, as_json, jobs, out);

    if (rel->parsed()) {
      const RelatorFamily f = family_from_int(family);
      SurgeryParams p = k.size() == 3 ? s2_params(k) : d2_params(k);
      if (f != RelatorFamily::R12)
        p.require_k3();
      out << to_json(relator(f, n[0], n[1], n[2], p)).dump() << '\n';
      return kOk;
    }

    if (d2->parsed() || s2->parsed()) {
      const ReduceOptions opt = options_from_env();
      const SkeinElement e = read_element(in_path);
      SkeinElement result;
      Certificate cert;
      if (d2->parsed()) {
        auto r = reduce_d2(e, d2_params(k), opt);
        result = std::move(r.normal);
        cert = std::move(r.cert);
      } else {
        auto r = reduce_s2(e, s2_params(k), opt);
        result = std::move(r.rep.elem);
        cert = std::move(r.cert);
      }
      if (!cert_path.empty())
        write_json(cert_path, to_json(cert));
      out << to_json(result).dump() << '\n';
      return kOk;
    }

    if (basis->parsed()) {
      const SurgeryParams p = d2_params(k);
      Json j;
      j["k"] = {p.k1, p.k2};
      j["n3_max"] = n3_max;
      j["basis"] = monomial_list(enumerate_basis(p, n3_max));
      out << j.dump() << '\n';
      return kOk;
    }

    if (gens->parsed()) {
      const auto g = generators(s2_params(k));
      Json j;
      j["k"] = k;
      j["count"] = g.size();
      j["generators"] = monomial_list(g);
      out << j.dump() << '\n';
      return kOk;
    }

    if (eta->parsed()) {
      const SurgeryParams p = s2_params(k);
      out << to_json(eta_elem(read_element(in_path), p)).dump() << '\n';
      return kOk;
    }

    if (check->parsed()) {
      const SkeinElement input = read_element(in_path);
      const SkeinElement output = read_element(out_path);
      Certificate cert;
      try {
        cert = certificate_from_json(read_json_file(cert_path));
      } catch (const ParseError& e) {
        const std::string msg = e.what();
        throw ParseError(msg.rfind(cert_path, 0) == 0 ? msg : cert_path + ": " + msg);
      }
      const bool ok = certificate_balances(input, output, cert);
      Json j;
      j["balanced"] = ok;
      j["steps"] = cert.steps.size();
      out << j.dump() << '\n';
      if (!ok)
        err << "certificate does not balance: input - output differs from the relator sum\n";
      return ok ? kOk : kVerificationFailed;
    }
  } catch (const TermLimitExceeded& e) {
    err << "error: " << e.what() << " (raise SKEINCALC_MAX_TERMS to allow more)\n";
    return kAborted;
  } catch (const NonTermination& e) {
    err << "error: " << e.what() << '\n';
    return kAborted;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kAborted;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace skein::cli
