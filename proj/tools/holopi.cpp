#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "holopi/catalog/verify.hpp"
#include "holopi/catalog_data.hpp"
#include "holopi/holonomic/guess.hpp"

using namespace holopi;

namespace {

enum Exit { kOk = 0, kMathFailure = 1, kUsage = 2 };

struct RunConfig {
  std::string id;
  std::string kernel;
  long order = 0;
  long terms = 40;
  long degree = 1;
  long digits = 0;
  long jobs = 1;
  long maxOrder = 4;
  long maxDegree = 6;
  std::string catalogPath;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

Catalog load_catalog(const RunConfig& cfg) {
  if (!cfg.catalogPath.empty()) return Catalog::from_file(cfg.catalogPath);
  if (const char* env = std::getenv("HOLOPI_CATALOG"); env && *env) return Catalog::from_file(env);
  return Catalog::from_string(kEmbeddedCatalog);
}

void check_limits(const RunConfig& cfg) {
  if (cfg.order != 0 && cfg.order < 10) fail(ErrorKind::InvalidArgument, "--order must be at least 10");
  if (cfg.digits != 0 && cfg.digits < 10) fail(ErrorKind::InvalidArgument, "--digits must be at least 10");
  if (cfg.jobs < 1) fail(ErrorKind::InvalidArgument, "--jobs must be positive");
}

void print(const RunConfig& cfg, const IdentityReport& r) {
  std::cout << (cfg.json() ? r.to_json().dump() : r.to_text()) << '\n';
}

int cmd_verify(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  IdentityReport r = verify_identity(c, c.identity(cfg.id), {cfg.order, cfg.digits});
  print(cfg, r);
  return r.pass ? kOk : kMathFailure;
}

std::vector<IdentityReport> run_all(const Catalog& c, const VerifyOptions& opt, long jobs) {
  const auto& all = c.identities();
  std::vector<IdentityReport> out(all.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < all.size(); i = next++) out[i] = verify_identity(c, all[i], opt);
  };
  std::vector<std::thread> pool;
  for (long t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

int cmd_verify_all(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  auto reports = run_all(c, {cfg.order, cfg.digits}, cfg.jobs);
  long failed = 0;
  for (const auto& r : reports) {
    print(cfg, r);
    failed += !r.pass;
  }
  if (!cfg.json()) std::cout << reports.size() - failed << "/" << reports.size() << " checks pass\n";
  return failed ? kMathFailure : kOk;
}

int cmd_satellite(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  auto h = c.kernel(cfg.kernel);
  auto found = discover_exact(*h, cfg.degree, cfg.terms);
  if (!found) {
    if (cfg.json())
      std::cout << Json{{"kernel", cfg.kernel}, {"found", false}}.dump() << '\n';
    else
      std::cout << "no satellite found for " << cfg.kernel << " at degree " << cfg.degree << '\n';
    return kMathFailure;
  }
  SatelliteTriple t = found->normalized();
  bool ok = verify_satellite(*h, t, cfg.terms);
  if (cfg.json()) {
    std::cout << Json{{"kernel", cfg.kernel},         {"found", true},
                      {"P", t.P.to_string()},         {"Q", t.Q.to_string()},
                      {"R", t.R.to_string()},         {"verifiedOrder", cfg.terms},
                      {"nullspaceDimension", t.nullspaceDimension}, {"pass", ok}}
                     .dump()
              << '\n';
  } else {
    std::cout << cfg.kernel << ": " << t.to_string() << "  (primitive, verified to order " << cfg.terms
              << ", nullspace dimension " << t.nullspaceDimension << ")\n";
  }
  return ok ? kOk : kMathFailure;
}

int cmd_pi(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  const IdentityEntry& e = c.identity(cfg.id);
  if (e.kind != "pi" && e.kind != "numeric") fail(ErrorKind::InvalidArgument, "'" + cfg.id + "' is not a numeric identity");
  VerifyOptions opt{0, cfg.digits, false};
  IdentityReport r = verify_identity(c, e, opt);
  print(cfg, r);
  return r.pass ? kOk : kMathFailure;
}

int cmd_q(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  std::string qid = cfg.id;
  if (c.has_identity(cfg.id)) {
    const IdentityEntry& e = c.identity(cfg.id);
    if (e.kind != "q") fail(ErrorKind::InvalidArgument, "'" + cfg.id + "' is not a q-series identity");
    qid = e.data.at("q").get<std::string>();
  }
  const long order = cfg.order ? cfg.order : 25;
  QCheck q = verify_q_identity_detail(qid, order, detail::q_sequences(c));
  if (cfg.json()) {
    Json parts = Json::object();
    for (const auto& [name, ok] : q.parts) parts[name] = ok;
    std::cout << Json{{"id", cfg.id}, {"order", order}, {"pass", q.pass}, {"parts", parts}}.dump() << '\n';
  } else {
    std::cout << (q.pass ? "PASS  " : "FAIL  ") << cfg.id << "  to q^" << order << '\n';
    for (const auto& [name, ok] : q.parts) std::cout << "  " << (ok ? "ok     " : "FAILS  ") << name << '\n';
  }
  return q.pass ? kOk : kMathFailure;
}

int cmd_seq(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  auto s = c.sequence(cfg.id);
  auto t = s->terms(cfg.terms);
  bool agree = true;
  if (s->has_closed_form() && s->has_recurrence()) agree = closed_matches_recurrence(*s, cfg.terms).agree;
  if (cfg.json()) {
    Json v = Json::array();
    for (const auto& x : t) v.push_back(x.get_str());
    std::cout << Json{{"id", cfg.id}, {"terms", v}, {"closedMatchesRecurrence", agree}}.dump() << '\n';
  } else {
    for (size_t n = 0; n < t.size(); ++n) std::cout << (n ? ", " : "") << t[n].get_str();
    std::cout << '\n';
    if (!agree) std::cout << "closed form and recurrence disagree\n";
  }
  return agree ? kOk : kMathFailure;
}

int cmd_guess(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  auto rec = guess_recurrence(c.sequence(cfg.id)->terms(cfg.terms), cfg.maxOrder, cfg.maxDegree);
  if (cfg.json()) {
    Json j{{"id", cfg.id}, {"found", rec.has_value()}};
    if (rec) j["recurrence"] = rec->to_string();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (rec ? rec->to_string() : "no recurrence of order <= " + std::to_string(cfg.maxOrder) + " and degree <= " +
                                              std::to_string(cfg.maxDegree))
              << '\n';
  }
  return rec ? kOk : kMathFailure;
}

int cmd_catalog(const RunConfig& cfg) {
  Catalog c = load_catalog(cfg);
  for (const auto& e : c.identities()) {
    if (cfg.json())
      std::cout << Json{{"id", e.id}, {"kind", e.kind}, {"paperTag", e.tag}, {"expect", e.expect}}.dump() << '\n';
    else
      std::cout << e.id << "  " << e.kind << "  [" << e.tag << "]" << (e.expect == "holds" ? "" : "  expect " + e.expect) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holopi: verify holonomic series identities and 1/pi formulas"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--catalog", cfg.catalogPath, "catalog JSON (default: $HOLOPI_CATALOG, else built in)");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "verify one catalog identity");
  verify->add_option("--id", cfg.id)->required();
  verify->add_option("--order", cfg.order, "truncation order override");
  verify->add_option("--digits", cfg.digits, "precision override");
  common(verify);

  auto* all = app.add_subcommand("verify-all", "verify every catalog identity");
  all->add_option("--order", cfg.order);
  all->add_option("--digits", cfg.digits);
  all->add_option("--jobs", cfg.jobs);
  common(all);

  auto* sat = app.add_subcommand("satellite", "discover a satellite identity for a kernel");
  sat->add_option("--kernel", cfg.kernel)->required();
  sat->add_option("--deg", cfg.degree);
  sat->add_option("--terms", cfg.terms);
  common(sat);

  auto* pi = app.add_subcommand("pi", "evaluate a numeric identity");
  pi->add_option("--id", cfg.id)->required();
  pi->add_option("--digits", cfg.digits);
  common(pi);

  auto* q = app.add_subcommand("q", "check a modular parameterization by q-expansion");
  q->add_option("--id", cfg.id)->required();
  q->add_option("--order", cfg.order);
  common(q);

  auto* seq = app.add_subcommand("seq", "print sequence terms");
  seq->add_option("--id", cfg.id)->required();
  seq->add_option("--terms", cfg.terms);
  common(seq);

  auto* guess = app.add_subcommand("guess", "guess a recurrence from sequence terms");
  guess->add_option("--id", cfg.id)->required();
  guess->add_option("--terms", cfg.terms);
  guess->add_option("--max-order", cfg.maxOrder);
  guess->add_option("--max-degree", cfg.maxDegree);
  common(guess);

  auto* cat = app.add_subcommand("catalog", "list catalog identities");
  common(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    check_limits(cfg);
    if (*guess && guess->count("--terms") == 0) cfg.terms = (cfg.maxOrder + 1) * (cfg.maxDegree + 1) + cfg.maxOrder + 10;
    if (*verify) return cmd_verify(cfg);
    if (*all) return cmd_verify_all(cfg);
    if (*sat) return cmd_satellite(cfg);
    if (*pi) return cmd_pi(cfg);
    if (*q) return cmd_q(cfg);
    if (*seq) return cmd_seq(cfg);
    if (*guess) return cmd_guess(cfg);
    return cmd_catalog(cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::UnknownId:
      case ErrorKind::CatalogError:
      case ErrorKind::InvalidArgument:
        return kUsage;
      default:
        return kMathFailure;
    }
  }
}
