#pragma once

#include <chrono>
#include <string>

#include "holopi/catalog/catalog.hpp"
#include "holopi/qmodular/numeric.hpp"
#include "holopi/satellite/satellite.hpp"
#include "holopi/specialize/transforms.hpp"

namespace holopi {

struct VerifyOptions {
  long order = 0;   // 0: the entry's own order
  long digits = 0;  // 0: the entry's own digits
  bool applyExpect = true;  // false: pass reflects the raw check, ignoring "fails"/"divergent"
};

struct IdentityReport {
  std::string id, tag, kind, expect;
  bool pass = false;
  bool holds = false;  // outcome of the mathematical check before applying `expect`
  long order = 0;
  long requestedDigits = 0;
  long agreedDigits = 0;
  long elapsedMs = 0;
  std::string detail;

  Json to_json() const {
    Json j{{"id", id}, {"paperTag", tag}, {"kind", kind}, {"pass", pass}, {"expect", expect}, {"elapsedMs", elapsedMs}, {"detail", detail}};
    if (requestedDigits > 0) {
      j["requestedDigits"] = requestedDigits;
      j["agreedDigits"] = agreedDigits;
    }
    if (order > 0) j["order"] = order;
    return j;
  }
  std::string to_text() const {
    std::string s = std::string(pass ? "PASS" : "FAIL") + "  " + id + "  [" + tag + "]  ";
    if (order > 0) s += "order " + std::to_string(order) + "  ";
    if (requestedDigits > 0) s += "digits " + std::to_string(agreedDigits) + "/" + std::to_string(requestedDigits) + "  ";
    return s + detail;
  }
};

namespace detail {

inline long pick(long override, const Json& j, const char* key, long fallback) {
  return override > 0 ? override : j.value(key, fallback);
}

inline QSequences q_sequences(const Catalog& c) {
  return {c.sequence("t24").get(), c.sequence("t6").get(), c.sequence("domb").get(), c.sequence("c3").get(), c.sequence("v").get()};
}

inline void run_check(const Catalog& c, const IdentityEntry& e, const VerifyOptions& opt, IdentityReport& r) {
  const Json& j = e.data;
  if (e.kind == "series" || e.kind == "translation") {
    r.order = pick(opt.order, j, "order", 40);
    LinearSide lhs = c.parse_side(j.at("lhs")), rhs = c.parse_side(j.at("rhs"));
    std::vector<std::string> params;
    for (const auto& p : j.value("params", Json::array())) params.push_back(p.get<std::string>());
    auto points = params.empty() ? std::vector<std::map<std::string, BigRational>>{{}} : affine_basis(params);
    SeriesCheck sc = verify_linear_identity(lhs, rhs, r.order, points);
    r.holds = sc.pass;
    r.detail = sc.pass ? "coefficients agree" : sc.detail;
    if (!params.empty()) r.detail += " (" + std::to_string(points.size()) + " parameter points)";
  } else if (e.kind == "sequence") {
    long upTo = pick(opt.order, j, "upTo", 30);
    AgreeResult a = seqs_agree(*c.sequence(j.at("a")), *c.sequence(j.at("b")), upTo);
    r.order = upTo;
    r.holds = a.agree;
    r.detail = a.agree ? "terms agree for n <= " + std::to_string(upTo) : "first mismatch at n = " + std::to_string(*a.firstMismatch);
  } else if (e.kind == "satellite") {
    r.order = pick(opt.order, j, "order", 60);
    const auto& h = *c.kernel(j.at("kernel"));
    const Json& t = j.at("triple");
    SatelliteTriple st{Catalog::parse_poly(t.at("P")), Catalog::parse_poly(t.at("Q")), Catalog::parse_poly(t.at("R")), h.id};
    bool ok = verify_satellite(h, st, r.order);
    auto found = discover_exact(h, 1, std::max(r.order, 40L));
    bool same = found && found->same_up_to_scaling(st);
    r.holds = ok && same;
    r.detail = std::string(ok ? "relation vanishes" : "relation does not vanish") + "; discovered " +
               (found ? found->to_string() : std::string("nothing"));
  } else if (e.kind == "ratfun") {
    long nMax = pick(opt.order, j, "nMax", 15);
    RatfunCheck rc = verify_whipple(nMax);
    r.order = nMax;
    r.holds = rc.pass;
    r.detail = rc.pass ? "exact for n <= " + std::to_string(nMax) : "fails at n = " + std::to_string(rc.failedAt);
  } else if (e.kind == "trans1") {
    long zOrder = pick(opt.order, j, "zOrder", 12);
    Trans1Slices s = expand_trans1(zOrder);
    r.order = zOrder;
    r.holds = s.equal;
    r.detail = s.equal ? "Laurent slices equal for m <= " + std::to_string(zOrder) : "slice mismatch at m = " + std::to_string(s.firstMismatch);
  } else if (e.kind == "trans2") {
    r.requestedDigits = pick(opt.digits, j, "digits", 40);
    r.order = j.value("zOrder", 6L);
    Trans2Check t = verify_trans2_numeric(Catalog::parse_number(j.at("y")), r.order, r.requestedDigits);
    r.agreedDigits = t.minAgreedDigits;
    r.holds = t.pass;
    r.detail = t.pass ? "all z-coefficients agree" : "z-coefficient " + std::to_string(t.failedAt) + " disagrees";
  } else if (e.kind == "q") {
    r.order = pick(opt.order, j, "order", 25);
    QCheck q = verify_q_identity_detail(j.at("q"), r.order, q_sequences(c));
    r.holds = q.pass;
    for (const auto& [name, ok] : q.parts) r.detail += (r.detail.empty() ? "" : ", ") + name + (ok ? " ok" : " FAILS");
  } else if (e.kind == "ode") {
    r.order = pick(opt.order, j, "order", 40);
    const OdeEntry& o = c.ode(j.at("ode"));
    long need = r.order + o.ode->order() + o.ode->max_degree();
    TruncatedSeries res = apply_ode(*o.ode, expand_sum(*o.solution, need).plain);
    bool zero = res.is_zero();
    bool recOk = true;
    if (!o.recurrence.empty()) {
      PRecurrence got = ode_to_recurrence(*o.ode, true);
      recOk = got.proportional_to(*c.sequence(o.recurrence)->recurrence());
    }
    r.holds = zero && recOk;
    r.detail = std::string(zero ? "residual vanishes" : "nonzero residual") +
               (o.recurrence.empty() ? "" : recOk ? "; recurrence matches " + o.recurrence : "; recurrence differs from " + o.recurrence);
  } else if (e.kind == "pi" || e.kind == "numeric") {
    r.requestedDigits = pick(opt.digits, j, "digits", 100);
    const Json& lhsJ = e.kind == "pi" ? j.at("series") : j.at("lhs");
    PiSeriesSpec lhs = c.parse_pi(lhsJ, e.id, e.tag);
    try {
      CheckReport cr;
      if (j.contains("rhs")) {
        cr = check_numeric_equality(lhs, c.parse_pi(j["rhs"], e.id + "-rhs", e.tag), r.requestedDigits);
      } else if (j.contains("target")) {
        lhs.target = Catalog::parse_quadratic(j["target"]);
        cr = check_pi_identity(lhs, r.requestedDigits);
      } else {
        PiEvaluation ev = evaluate_pi_series(lhs, r.requestedDigits);
        cr.pass = true;
        cr.agreedDigits = r.requestedDigits;
        cr.detail = "value " + ev.value.to_string(20);
      }
      r.holds = cr.pass;
      r.agreedDigits = cr.agreedDigits;
      r.detail = cr.detail;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DivergenceDetected) throw;
      r.holds = false;
      r.detail = err.what();
      if (e.expect == "divergent" && opt.applyExpect) {
        r.pass = true;
        r.detail = "divergence flagged: " + r.detail;
      }
      return;
    }
  } else if (e.kind == "note") {
    r.holds = true;
    r.detail = j.value("text", "");
  } else {
    fail(ErrorKind::CatalogError, "unknown identity kind '" + e.kind + "'");
  }
  if (!opt.applyExpect) {
    r.pass = r.holds;
  } else if (e.expect == "fails") {
    r.pass = !r.holds;
    r.detail = (r.holds ? "unexpectedly holds: " : "confirmed false as stated: ") + r.detail;
  } else if (e.expect == "divergent") {
    r.pass = false;
    r.detail = "expected divergence not flagged: " + r.detail;
  } else {
    r.pass = r.holds;
  }
}

}  // namespace detail

/// Runs the module check behind one catalog entry. Mathematical failures are
/// reported; catalog/usage errors propagate as Error.
inline IdentityReport verify_identity(const Catalog& c, const IdentityEntry& e, const VerifyOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  IdentityReport r;
  r.id = e.id;
  r.tag = e.tag;
  r.kind = e.kind;
  r.expect = e.expect;
  try {
    detail::run_check(c, e, opt, r);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::UnknownId || err.kind() == ErrorKind::CatalogError) throw;
    r.pass = false;
    r.detail = err.what();
  }
  r.elapsedMs = detail::elapsed_ms(t0);
  return r;
}

}  // namespace holopi
