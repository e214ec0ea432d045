#pragma once

#include <chrono>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holopi/holonomic/guess.hpp"
#include "holopi/kernels/sequence.hpp"
#include "holopi/numerics/pi.hpp"
#include "holopi/numerics/quadratic.hpp"

namespace holopi {

/// prefactor * sqrt(prefactorSqrt) * sum_n (A n + B) w(n) x^n sum_k h(n,k) y^k,
/// claimed equal to target / pi when a target is given.
struct PiSeriesSpec {
  std::string id;
  std::string tag;
  std::shared_ptr<const SequenceDef> sequence;
  std::shared_ptr<const BinomialKernel> kernel;
  BigRational y = 1;
  QuadraticNumber A = 1, B = 0, x = 0;
  QuadraticNumber prefactor = 1, prefactorSqrt = 1;
  std::optional<QuadraticNumber> target;

  bool exact_terms() const { return A.is_rational() && B.is_rational() && x.is_rational(); }
};

struct PiEvaluation {
  HPReal value;
  long terms = 0;
  double errorLog10 = 0;
  std::string method;
};

namespace detail {

constexpr long kRatioWindow = 5;
constexpr long kDivergenceScan = 200;
constexpr long kMaxTerms = 200000;
const double kRatioLimit = std::log10(1.0 - 1.0 / 64);

inline double log10_abs(const BigRational& r) {
  if (r == 0) return -INFINITY;
  long en, ed;
  double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t()), md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
  return std::log10(std::fabs(mn / md)) + (en - ed) * 0.30102999566398120;
}

inline double log10_abs(const BigInt& z) { return log10_abs(BigRational(z)); }

/// w(n) sum_k h(n,k) y^k, exact.
inline BigRational coefficient(const PiSeriesSpec& s, long n) {
  BigRational c = s.sequence ? (*s.sequence)(n) : BigRational(1);
  if (c != 0 && s.kernel) c *= s.kernel->inner_sum(n, s.y);
  return c;
}

/// Coefficients w(n) sum_k h(n,k) y^k of a double sum. Past kGuessAt rows, a P-recurrence
/// is guessed from the first rows, confirmed exactly on the following ones, and then
/// used to extend the rows at constant cost per row.
class RowSource {
 public:
  static constexpr long kGuessAt = 120, kFit = 90;

  explicit RowSource(const PiSeriesSpec& s) : spec_(s) {}

  BigRational operator()(long n) {
    if (n < static_cast<long>(rows_.size())) return rows_[static_cast<size_t>(n)];
    if (rec_) {
      try {
        rec_->extend(rows_, n);
        return rows_[static_cast<size_t>(n)];
      } catch (const Error&) {
        rec_.reset();
        guessed_ = true;
      }
    }
    while (static_cast<long>(rows_.size()) <= n) {
      rows_.push_back(coefficient(spec_, static_cast<long>(rows_.size())));
      if (!guessed_ && spec_.kernel && static_cast<long>(rows_.size()) == kGuessAt) try_guess();
    }
    return rows_[static_cast<size_t>(n)];
  }

 private:
  void try_guess() {
    guessed_ = true;
    std::vector<BigRational> fit(rows_.begin(), rows_.begin() + kFit);
    std::optional<PRecurrence> rec;
    try {
      rec = guess_recurrence(fit, 4, 8);
    } catch (const Error&) {
      return;
    }
    if (!rec) return;
    for (long n = rec->order(); n < kGuessAt; ++n)
      if (rec->residual(rows_, n) != 0) return;
    rec_ = rec;
  }

  const PiSeriesSpec& spec_;
  std::vector<BigRational> rows_;
  std::optional<PRecurrence> rec_;
  bool guessed_ = false;
};

/// Tracks magnitudes of consecutive nonzero terms for the stopping and divergence rules.
struct RatioTracker {
  double last = NAN;
  std::vector<double> ratios;
  void push(double mag) {
    if (!std::isfinite(mag)) return;
    if (std::isfinite(last)) ratios.push_back(mag - last);
    last = mag;
  }
  bool contracting() const {
    if (static_cast<long>(ratios.size()) < kRatioWindow) return false;
    for (size_t i = ratios.size() - kRatioWindow; i < ratios.size(); ++i)
      if (ratios[i] >= kRatioLimit) return false;
    return true;
  }
  double worst() const {
    double w = -INFINITY;
    for (size_t i = ratios.size() - kRatioWindow; i < ratios.size(); ++i) w = std::max(w, ratios[i]);
    return w;
  }
};

/// log10 of the geometric tail bound |t| rho / (1 - rho).
inline double tail_bound(double lastMag, double logRho) {
  double rho = std::pow(10.0, logRho);
  return lastMag + std::log10(rho / (1 - rho));
}

struct Split {
  BigInt p, q, t;
};

/// Range [a, b) of sum c_n prod_{i<=n} p_i/q_i with c_n = alpha n + beta.
template <class PF, class QF>
Split binary_split(long a, long b, const PF& pf, const QF& qf, const BigInt& alpha, const BigInt& beta) {
  if (b - a == 1) {
    Split s{a == 0 ? BigInt(1) : pf(a), a == 0 ? BigInt(1) : qf(a), 0};
    s.t = (alpha * a + beta) * s.p;
    return s;
  }
  long m = a + (b - a) / 2;
  Split l = binary_split(a, m, pf, qf, alpha, beta), r = binary_split(m, b, pf, qf, alpha, beta);
  return {l.p * r.p, l.q * r.q, l.t * r.q + l.p * r.t};
}

inline bool hypergeometric(const PiSeriesSpec& s) {
  return s.exact_terms() && !s.kernel && s.sequence && s.sequence->has_recurrence() && s.sequence->recurrence()->order() == 1;
}

/// Sum of an exactly alternating tail sum_m (-1)^m a_m via the Euler transform over
/// integers, doubling the number of differences until the transformed terms are negligible.
inline std::optional<std::pair<HPReal, double>> euler_tail(const std::vector<BigRational>& a, long bits, double tolLog10) {
  const long K = static_cast<long>(a.size()) - 1;
  BigInt L = 1;
  for (const auto& v : a) L = lcm(L, BigInt(v.get_den()));
  std::vector<BigInt> d;
  d.reserve(a.size());
  for (const auto& v : a) d.emplace_back(BigInt(v * L));
  const double logL = log10_abs(L);
  HPReal sum(bits);
  int small = 0;
  for (long k = 0; k < K; ++k) {
    BigInt den = L << static_cast<unsigned long>(k + 1);
    HPReal e = HPReal(make_rational(d[0], den), bits);
    if (k % 2) sum -= e;
    else sum += e;
    double mag = log10_abs(d[0]) - logL - (k + 1) * 0.30102999566398120;
    small = (d[0] == 0 || mag < tolLog10) ? small + 1 : 0;
    if (k >= 20 && small >= kRatioWindow) return std::make_pair(sum, mag);
    for (long m = 0; m + 1 < static_cast<long>(d.size()) - k; ++m) d[m] = d[m + 1] - d[m];
  }
  return std::nullopt;
}

}  // namespace detail

/// The bare sum (without prefactors) to `digits` significant digits plus 10 guard digits.
/// Geometric convergence is required (last 5 term ratios below 1 - 1/64 once the terms
/// are negligible); exactly alternating boundary series with shrinking terms are summed
/// by the Euler transform. Anything else raises DivergenceDetected.
inline PiEvaluation evaluate_sum(const PiSeriesSpec& s, long digits) {
  using namespace detail;
  const long work = digits + 10;
  const long bits = digits_to_bits(work) + guard_bits(kMaxTerms);
  const double xMag = s.x.is_rational() ? log10_abs(s.x.rational_part()) : quadratic_to_hp(s.x, 64).log10_abs();
  if (s.x == QuadraticNumber(0)) {
    PiEvaluation ev{HPReal(coefficient(s, 0) * s.B.rational_part(), bits), 1, -INFINITY, "direct"};
    if (!s.B.is_rational()) ev.value = HPReal(coefficient(s, 0), bits) * quadratic_to_hp(s.B, bits);
    return ev;
  }

  if (hypergeometric(s)) {
    // magnitudes from the recurrence ratio in double precision; exact sum by binary splitting
    const PRecurrence& rec = *s.sequence->recurrence();
    const BigRational x = s.x.rational_part(), A = s.A.rational_part(), B = s.B.rational_part();
    const BigRational c0 = (*s.sequence)(0);
    RatioTracker tr;
    double mag = log10_abs(c0), maxMag = -INFINITY;
    long n0 = -1;
    for (long n = 0; n < kMaxTerms; ++n) {
      if (n > 0) {
        BigRational r = -rec.coeffs[1](BigRational(n)) / rec.coeffs[0](BigRational(n));
        if (r == 0) {
          n0 = n;
          break;
        }
        mag += log10_abs(r) + xMag;
      }
      double tm = mag + log10_abs(A * n + B);
      maxMag = std::max(maxMag, tm);
      tr.push(tm);
      if (n == kDivergenceScan && !tr.contracting())
        fail(ErrorKind::DivergenceDetected, "term ratio not below 1 - 1/64 after 200 terms for '" + s.id + "'");
      if (n >= 20 && std::isfinite(tm) && tr.contracting() && tm < maxMag - work) {
        n0 = n + 1;
        break;
      }
    }
    if (n0 < 0) fail(ErrorKind::DivergenceDetected, "series for '" + s.id + "' did not converge");
    // term ratio -p1(n) x / p0(n) as a quotient of integers
    auto den_lcm = [](const Polynomial& p) {
      BigInt l = 1;
      for (long i = 0; i <= p.degree(); ++i) l = lcm(l, BigInt(p[i].get_den()));
      return l;
    };
    const BigInt pDen = den_lcm(rec.coeffs[1]), qDen = den_lcm(rec.coeffs[0]);
    auto pf = [&](long n) -> BigInt { return BigInt(-rec.coeffs[1](BigRational(n)) * pDen) * x.get_num() * qDen; };
    auto qf = [&](long n) -> BigInt { return BigInt(rec.coeffs[0](BigRational(n)) * qDen) * x.get_den() * pDen; };
    BigInt D = lcm(BigInt(A.get_den()), BigInt(B.get_den()));
    Split sp = binary_split(0, n0, pf, qf, BigInt(A * D), BigInt(B * D));
    BigRational total = c0 * make_rational(sp.t, sp.q * D);
    double err = tr.contracting() ? tail_bound(tr.last, tr.worst()) : -INFINITY;
    return {HPReal(total, bits), n0, err, "binary-splitting"};
  }

  // direct summation, one HPReal conversion per row
  const bool exact = s.exact_terms();
  HPReal xh = quadratic_to_hp(s.x, bits), Ah = quadratic_to_hp(s.A, bits), Bh = quadratic_to_hp(s.B, bits);
  HPReal sum(bits), xp(1, bits);
  BigRational xr = exact ? s.x.rational_part() : BigRational(0), xpr = 1;
  std::vector<BigRational> exactTerms;
  RatioTracker tr;
  RowSource rows(s);
  double maxMag = -INFINITY;
  for (long n = 0; n < kMaxTerms; ++n) {
    BigRational c = rows(n);
    double tm;
    if (exact && n <= 2 * kDivergenceScan) {
      BigRational t = c * (s.A.rational_part() * n + s.B.rational_part()) * xpr;
      exactTerms.push_back(t);
      sum += HPReal(t, bits);
      tm = log10_abs(t);
      xpr *= xr;
      if (n == 2 * kDivergenceScan) xp = HPReal(xpr, bits);
    } else if (exact) {
      HPReal t = HPReal(c * (s.A.rational_part() * n + s.B.rational_part()), bits) * xp;
      sum += t;
      tm = t.log10_abs();
      xp *= xh;
    } else {
      HPReal t = HPReal(c, bits) * (Ah * HPReal(n, bits) + Bh) * xp;
      sum += t;
      tm = t.log10_abs();
      xp *= xh;
    }
    if (std::isfinite(tm)) maxMag = std::max(maxMag, tm);
    tr.push(tm);
    if (n >= 20 && std::isfinite(tm) && tr.contracting() && tm < maxMag - work)
      return {sum, n + 1, tail_bound(tr.last, tr.worst()), "direct"};
    if (n == kDivergenceScan && !tr.contracting()) {
      if (!exact) fail(ErrorKind::DivergenceDetected, "term ratio not below 1 - 1/64 after 200 terms for '" + s.id + "'");
      break;
    }
  }
  if (!exact) fail(ErrorKind::DivergenceDetected, "series for '" + s.id + "' did not converge");

  // boundary branch: strict alternation and shrinking magnitudes on 100..200
  const long n1 = kDivergenceScan / 2;
  for (long n = n1; n < kDivergenceScan; ++n) {
    const auto &a = exactTerms[n], &b = exactTerms[n + 1];
    if (a == 0 || b == 0 || (a > 0) == (b > 0))
      fail(ErrorKind::DivergenceDetected, "terms of '" + s.id + "' neither contract nor alternate");
    if (n >= 150 && abs(b) > abs(a)) fail(ErrorKind::DivergenceDetected, "alternating terms of '" + s.id + "' grow");
  }
  BigRational head = 0;
  for (long n = 0; n < n1; ++n) head += exactTerms[n];
  const int sign = exactTerms[n1] > 0 ? 1 : -1;
  double tol = maxMag - work;
  for (long K = 64; K <= 16384; K *= 2) {
    std::vector<BigRational> a;
    BigRational xq = rational_pow(s.x.rational_part(), n1);
    for (long m = 0; m <= K; ++m) {
      long n = n1 + m;
      a.push_back(abs(rows(n) * (s.A.rational_part() * n + s.B.rational_part()) * xq));
      xq *= s.x.rational_part();
    }
    if (auto tail = euler_tail(a, bits, tol)) {
      HPReal total = HPReal(head, bits) + (sign > 0 ? tail->first : -tail->first);
      return {total, n1 + K, tail->second, "euler"};
    }
  }
  fail(ErrorKind::DivergenceDetected, "Euler transform did not settle for '" + s.id + "'");
}

/// Full value including the prefactors.
inline PiEvaluation evaluate_pi_series(const PiSeriesSpec& s, long digits) {
  if (digits < 1) fail(ErrorKind::InvalidArgument, "digits must be positive");
  PiEvaluation ev = evaluate_sum(s, digits);
  const long bits = ev.value.precision_bits();
  HPReal f = quadratic_to_hp(s.prefactor, bits);
  if (!(s.prefactorSqrt == QuadraticNumber(1))) f *= hp_sqrt(quadratic_to_hp(s.prefactorSqrt, bits));
  ev.value *= f;
  return ev;
}

struct CheckReport {
  std::string id;
  std::string paperTag;
  bool pass = false;
  long requestedDigits = 0;
  long agreedDigits = 0;
  long elapsedMs = 0;
  std::string detail;
};

namespace detail {
inline long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
}
}  // namespace detail

/// target / pi as an HPReal at the evaluation precision.
inline HPReal pi_target(const QuadraticNumber& r, long digits, long bits) {
  HPReal pi = pi_oracle(digits + 20).with_precision(bits);
  return quadratic_to_hp(r, bits) / pi;
}

inline CheckReport check_pi_identity(const PiSeriesSpec& s, long digits) {
  auto t0 = std::chrono::steady_clock::now();
  if (!s.target) fail(ErrorKind::InvalidArgument, "pi series '" + s.id + "' has no target");
  PiEvaluation ev = evaluate_pi_series(s, digits);
  HPReal want = pi_target(*s.target, digits, ev.value.precision_bits());
  CheckReport r{s.id, s.tag, false, digits, agreed_digits(ev.value, want, digits + 10), 0, ev.method};
  r.pass = r.agreedDigits >= digits;
  r.detail = ev.method + ", " + std::to_string(ev.terms) + " terms";
  r.elapsedMs = detail::elapsed_ms(t0);
  return r;
}

inline CheckReport check_numeric_equality(const PiSeriesSpec& a, const PiSeriesSpec& b, long digits) {
  auto t0 = std::chrono::steady_clock::now();
  PiEvaluation ea = evaluate_pi_series(a, digits), eb = evaluate_pi_series(b, digits);
  CheckReport r{a.id, a.tag, false, digits, agreed_digits(ea.value, eb.value, digits + 10), 0, ""};
  r.pass = r.agreedDigits >= digits;
  r.detail = ea.method + " vs " + eb.method;
  r.elapsedMs = detail::elapsed_ms(t0);
  return r;
}

}  // namespace holopi
