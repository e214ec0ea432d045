#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "holopi/holonomic/ode.hpp"
#include "holopi/piverify/pi_series.hpp"
#include "holopi/specialize/sum_spec.hpp"

namespace holopi {

using Json = nlohmann::json;

struct OdeEntry {
  std::string id, tag;
  std::shared_ptr<LODE> ode;
  std::shared_ptr<const SumSpec> solution;
  std::string recurrence;  // sequence id, may be empty
};

struct IdentityEntry {
  std::string id, tag, kind;
  std::string expect = "holds";  // holds | fails | divergent
  Json data;
};

/// Sequences, kernels, ODEs and identities parsed from the JSON catalog. Parsed
/// SumSpecs keep shared pointers into the catalog, so entries stay valid while
/// the catalog lives.
class Catalog {
 public:
  static Catalog from_string(const std::string& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      fail(ErrorKind::CatalogError, std::string("invalid catalog JSON: ") + e.what());
    }
    Catalog c;
    try {
      c.load(j);
    } catch (const Json::exception& e) {
      fail(ErrorKind::CatalogError, std::string("malformed catalog entry: ") + e.what());
    }
    return c;
  }

  static Catalog from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::CatalogError, "cannot read catalog '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
  }

  std::shared_ptr<const SequenceDef> sequence(const std::string& id) const { return find(sequences_, id, "sequence"); }
  std::shared_ptr<const BinomialKernel> kernel(const std::string& id) const { return find(kernels_, id, "kernel"); }
  const OdeEntry& ode(const std::string& id) const {
    auto it = odes_.find(id);
    if (it == odes_.end()) fail(ErrorKind::UnknownId, "unknown ODE '" + id + "'");
    return it->second;
  }
  const IdentityEntry& identity(const std::string& id) const {
    for (const auto& e : identities_)
      if (e.id == id) return e;
    fail(ErrorKind::UnknownId, "unknown identity '" + id + "'");
  }
  bool has_identity(const std::string& id) const {
    for (const auto& e : identities_)
      if (e.id == id) return true;
    return false;
  }
  const std::vector<IdentityEntry>& identities() const { return identities_; }
  std::vector<std::string> sequence_ids() const { return keys(sequences_); }
  std::vector<std::string> kernel_ids() const { return keys(kernels_); }

  SumSpec parse_sum(const Json& j) const {
    SumSpec s;
    if (j.contains("outer")) s.outer = sequence(j["outer"].get<std::string>());
    if (j.contains("kernel")) s.kernel = j["kernel"].is_string() ? kernel(j["kernel"].get<std::string>())
                                                                  : std::make_shared<const BinomialKernel>(parse_kernel(j["kernel"], ""));
    s.xPerN = j.value("xPerN", 1L);
    s.xPerK = j.value("xPerK", 1L);
    if (j.contains("nScale")) s.nScale = parse_number(j["nScale"]);
    if (j.contains("kScale")) s.kScale = parse_number(j["kScale"]);
    for (const auto& p : j.value("pre", Json::array()))
      s.pre.push_back({parse_poly(p["poly"]), parse_number(p.value("n", Json("0"))), parse_number(p.value("c", Json("0")))});
    return s;
  }

  SeriesExpr parse_expr(const Json& j) const {
    SeriesExpr e;
    for (const auto& t : j) {
      SeriesExpr::Term term{parse_number(t.value("c", Json("1"))), {}};
      for (const auto& f : t.value("f", Json::array()))
        term.factors.push_back({parse_poly(f["p"]), parse_number(f.value("e", Json("1")))});
      e.terms.push_back(std::move(term));
    }
    return e;
  }

  /// {"sum": spec} or {"linear": [terms]}
  LinearSide parse_side(const Json& j) const {
    LinearSide side;
    if (j.contains("sum")) {
      side.terms.push_back({std::nullopt, SeriesExpr::constant(1), false, std::make_shared<const SumSpec>(parse_sum(j["sum"]))});
      return side;
    }
    for (const auto& t : j.at("linear")) {
      LinearSide::Term term;
      if (t.contains("param")) term.param = t["param"].get<std::string>();
      if (t.contains("times")) term.times = parse_expr(t["times"]);
      term.weighted = t.value("weighted", false);
      if (t.contains("of")) term.of = std::make_shared<const SumSpec>(parse_sum(t["of"]));
      side.terms.push_back(std::move(term));
    }
    return side;
  }

  PiSeriesSpec parse_pi(const Json& j, const std::string& id, const std::string& tag) const {
    PiSeriesSpec s;
    s.id = id;
    s.tag = tag;
    if (j.contains("outer")) s.sequence = sequence(j["outer"].get<std::string>());
    if (j.contains("kernel")) s.kernel = kernel(j["kernel"].get<std::string>());
    if (j.contains("y")) s.y = parse_number(j["y"]);
    if (j.contains("x")) s.x = parse_quadratic(j["x"]);
    if (j.contains("A")) s.A = parse_quadratic(j["A"]);
    if (j.contains("B")) s.B = parse_quadratic(j["B"]);
    if (j.contains("prefactor")) s.prefactor = parse_quadratic(j["prefactor"]);
    if (j.contains("prefactorSqrt")) s.prefactorSqrt = parse_quadratic(j["prefactorSqrt"]);
    return s;
  }

  /// "p/q", integer, {"r","s","d"} for r + s sqrt(d), or {"sqrt": r}.
  static QuadraticNumber parse_quadratic(const Json& j) {
    if (j.is_object()) {
      if (j.contains("sqrt")) return QuadraticNumber::sqrt_of(parse_number(j["sqrt"]));
      return QuadraticNumber(parse_number(j.value("r", Json("0"))), parse_number(j.at("s")), BigInt(j.at("d").get<long>()));
    }
    return QuadraticNumber(parse_number(j));
  }

  static BigRational parse_number(const Json& j) {
    if (j.is_number_integer()) return BigRational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(ErrorKind::CatalogError, "expected a rational, got " + j.dump());
  }

  static Polynomial parse_poly(const Json& j) {
    std::vector<BigRational> c;
    for (const auto& v : j) c.push_back(parse_number(v));
    return Polynomial(std::move(c));
  }

  static BinomialKernel parse_kernel(const Json& j, const std::string& id) {
    BinomialKernel k;
    k.id = id;
    auto affine = [&](const Json& a) {
      std::vector<long> v = a.get<std::vector<long>>();
      if (v.size() == 3) return Affine{v[0], v[1], 0, v[2]};
      if (v.size() == 4) {
        k.hasJ = k.hasJ || v[2] != 0;
        return Affine{v[0], v[1], v[2], v[3]};
      }
      fail(ErrorKind::CatalogError, "affine form needs 3 or 4 entries: " + a.dump());
    };
    for (const auto& f : j.at("factors")) k.factors.push_back({affine(f["top"]), affine(f["bottom"]), f.value("power", 1L)});
    if (j.contains("scalar")) k.scalar = parse_number(j["scalar"]);
    for (const auto& g : j.value("geometric", Json::array())) k.geometric.push_back({parse_number(g["base"]), affine(g["exponent"])});
    // [a, c] means a n + c; [a, b, c] means a n + b k + c
    auto bound = [](const Json& b) {
      if (b.size() == 2) return Bound{parse_number(b[0]), 0, parse_number(b[1])};
      if (b.size() == 3) return Bound{parse_number(b[0]), parse_number(b[1]), parse_number(b[2])};
      fail(ErrorKind::CatalogError, "bound needs 2 or 3 entries: " + b.dump());
    };
    if (j.contains("support")) {
      const Json& s = j["support"];
      if (s.contains("kMin")) k.kMin = bound(s["kMin"]);
      if (s.contains("kMax")) k.kMax = bound(s["kMax"]);
      if (s.contains("jMin")) {
        k.jMin = bound(s["jMin"]);
        k.hasJ = true;
      }
      if (s.contains("jMax")) {
        k.jMax = bound(s["jMax"]);
        k.hasJ = true;
      }
    }
    return k;
  }

 private:
  void load(const Json& j) {
    for (const auto& s : j.value("sequences", Json::array())) {
      std::string id = s.at("id").get<std::string>();
      std::optional<BinomialKernel> closed;
      if (s.contains("closedForm")) closed = parse_kernel(s["closedForm"], id);
      std::optional<PRecurrence> rec;
      if (s.contains("recurrence")) {
        PRecurrence r;
        for (const auto& p : s["recurrence"].at("coeffs")) r.coeffs.push_back(parse_poly(p));
        for (const auto& v : s["recurrence"].value("initial", Json::array({1}))) r.initial.push_back(parse_number(v));
        rec = r;
      }
      std::vector<BigRational> known;
      for (const auto& v : s.value("knownTerms", Json::array())) known.push_back(parse_number(v));
      insert(sequences_, id, std::make_shared<SequenceDef>(id, closed, rec, known), "sequence");
    }
    for (const auto& k : j.value("kernels", Json::array())) {
      std::string id = k.at("id").get<std::string>();
      insert(kernels_, id, std::make_shared<BinomialKernel>(parse_kernel(k, id)), "kernel");
    }
    for (const auto& o : j.value("odes", Json::array())) {
      OdeEntry e;
      e.id = o.at("id").get<std::string>();
      e.tag = o.value("tag", "");
      std::vector<Polynomial> coeffs;
      for (const auto& p : o.at("coeffs")) coeffs.push_back(parse_poly(p));
      e.ode = std::make_shared<LODE>(coeffs, o.contains("rhs") ? parse_poly(o["rhs"]) : Polynomial());
      e.solution = std::make_shared<const SumSpec>(parse_sum(o.at("solution")));
      e.recurrence = o.value("recurrence", "");
      if (!odes_.emplace(e.id, e).second) fail(ErrorKind::CatalogError, "duplicate ODE id '" + e.id + "'");
    }
    for (const auto& i : j.value("identities", Json::array())) {
      IdentityEntry e{i.at("id").get<std::string>(), i.value("tag", ""), i.at("kind").get<std::string>(), i.value("expect", "holds"), i};
      if (has_identity(e.id)) fail(ErrorKind::CatalogError, "duplicate identity id '" + e.id + "'");
      identities_.push_back(std::move(e));
    }
  }

  template <class T>
  static void insert(std::map<std::string, std::shared_ptr<T>>& m, const std::string& id, std::shared_ptr<T> v, const char* what) {
    if (!m.emplace(id, std::move(v)).second) fail(ErrorKind::CatalogError, std::string("duplicate ") + what + " id '" + id + "'");
  }
  template <class T>
  static std::shared_ptr<const T> find(const std::map<std::string, std::shared_ptr<T>>& m, const std::string& id, const char* what) {
    auto it = m.find(id);
    if (it == m.end()) fail(ErrorKind::UnknownId, std::string("unknown ") + what + " '" + id + "'");
    return it->second;
  }
  template <class T>
  static std::vector<std::string> keys(const std::map<std::string, T>& m) {
    std::vector<std::string> k;
    for (const auto& [id, v] : m) k.push_back(id);
    return k;
  }

  std::map<std::string, std::shared_ptr<SequenceDef>> sequences_;
  std::map<std::string, std::shared_ptr<BinomialKernel>> kernels_;
  std::map<std::string, OdeEntry> odes_;
  std::vector<IdentityEntry> identities_;
};

}  // namespace holopi
