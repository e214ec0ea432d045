#pragma once

#include <memory>
#include <string>
#include <vector>

#include "holopi/numerics/rationalize.hpp"
#include "holopi/piverify/pi_series.hpp"
#include "holopi/qmodular/qseries.hpp"

namespace holopi {

namespace detail {

constexpr long kMaxQTerms = 10000000;

/// prod_j (1 - q^{scale j}), stopping once |q^{scale j}| < eps; the tail of
/// log prod is then below 2 eps.
inline HPReal hp_euler_product(const HPReal& q, long scale, const HPReal& eps) {
  const long bits = q.precision_bits();
  HPReal step = hp_pow(q, scale), qp = step, prod(1, bits);
  for (long j = 1; j < kMaxQTerms; ++j) {
    prod *= HPReal(1, bits) - qp;
    if (qp.abs() < eps) return prod;
    qp *= step;
  }
  fail(ErrorKind::QOutOfRange, "eta product did not converge");
}

/// P(q^scale) = 1 - 24 sum_j j q^{sj} / (1 - q^{sj})
inline HPReal hp_eisenstein_P(const HPReal& q, long scale, const HPReal& eps) {
  const long bits = q.precision_bits();
  HPReal step = hp_pow(q, scale), qp = step, sum(bits);
  for (long j = 1; j < kMaxQTerms; ++j) {
    HPReal t = HPReal(j, bits) * qp / (HPReal(1, bits) - qp);
    sum += t;
    if (t.abs() < eps) return HPReal(1, bits) - HPReal(24, bits) * sum;
    qp *= step;
  }
  fail(ErrorKind::QOutOfRange, "Eisenstein series did not converge");
}

inline HPReal hp_eta_quotient(const HPReal& q, const std::vector<EtaFactor>& factors, const HPReal& eps) {
  long num = 0;
  for (const auto& f : factors) num += f.scale * f.multiplicity;
  if (num % 24 != 0) fail(ErrorKind::FractionalOffset, "eta quotient offset is not an integer");
  HPReal v = hp_pow(q, num / 24);
  for (const auto& f : factors) v *= hp_pow(hp_euler_product(q, f.scale, eps), f.multiplicity);
  return v;
}

}  // namespace detail

/// Numeric value of a named modular expression at real q, 0 < |q| < 1.
/// Names: x24, z24, E24 (level 24) and y6, z6 (level 6).
inline HPReal evaluate_modular_at_q(const std::string& exprId, const HPReal& q, long digits) {
  if (q.is_zero() || !(q.abs() < HPReal(1, q.precision_bits())))
    fail(ErrorKind::QOutOfRange, "q must satisfy 0 < |q| < 1");
  const long bits = std::max(q.precision_bits(), digits_to_bits(digits + 10));
  const HPReal qq = q.with_precision(bits);
  const HPReal eps = HPReal::from_string("1e-" + std::to_string(digits + 15), bits);
  auto E = [&] { return detail::hp_eta_quotient(qq, {{2, 1}, {4, 1}, {6, 1}, {12, 1}}, eps); };
  auto z = [&] {
    HPReal v = HPReal(6, bits) * detail::hp_eisenstein_P(qq, 12, eps) - HPReal(3, bits) * detail::hp_eisenstein_P(qq, 6, eps) +
               HPReal(2, bits) * detail::hp_eisenstein_P(qq, 4, eps) - detail::hp_eisenstein_P(qq, 2, eps);
    return v / HPReal(4, bits) + HPReal(2, bits) * E();
  };
  if (exprId == "E24") return E();
  if (exprId == "z24") return z();
  if (exprId == "x24") return E() / z();
  if (exprId == "z6") return detail::hp_eta_quotient(qq, {{1, 4}, {3, 4}, {2, -2}, {6, -2}}, eps);
  if (exprId == "y6") return detail::hp_eta_quotient(qq, {{2, 6}, {6, 6}, {1, -6}, {3, -6}}, eps);
  fail(ErrorKind::UnknownId, "unknown modular expression '" + exprId + "'");
}

/// sign * exp(-2 pi sqrt(N/24))
inline HPReal table_q(long N, int sign, long digits) {
  const long bits = digits_to_bits(digits + 20);
  HPReal pi = pi_oracle(digits + 20).with_precision(bits);
  HPReal q = hp_exp(-(HPReal(2, bits) * pi * hp_sqrt(HPReal(make_rational(N, 24), bits))));
  return sign < 0 ? -q : q;
}

struct LambdaResult {
  QuadraticNumber x;
  QuadraticNumber lambda;
  long verifiedDigits = 0;
};

namespace detail {

/// Radicands tried for quadratic recognition at level N.
inline std::vector<BigInt> candidate_radicands(long N) {
  std::vector<BigInt> out;
  for (long m : {1L, 2L, 3L, 6L}) {
    BigInt d = squarefree_split(BigInt(N * m)).second;
    if (d != 1 && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

inline std::optional<QuadraticNumber> recognize(const HPReal& v, long tolDigits, const std::vector<BigInt>& radicands) {
  if (auto r = rationalize(v, tolDigits, BigInt("1000000000"))) return QuadraticNumber(*r);
  for (const auto& d : radicands)
    if (auto q = recognize_quadratic(v, d, tolDigits)) return *q;
  return std::nullopt;
}

}  // namespace detail

/// The level 24 series for 1/pi at x_N = x(sign e^{-2 pi sqrt(N/24)}):
/// sqrt((1+4x)(1-4x)(1-8x)) sum (n + lambda) t(n) x^n = sqrt(6/N) / pi.
inline PiSeriesSpec level24_pi_spec(std::shared_ptr<const SequenceDef> t24, long N, const QuadraticNumber& x,
                                    const QuadraticNumber& lambda) {
  PiSeriesSpec s;
  s.id = "level24-N" + std::to_string(N);
  s.sequence = std::move(t24);
  s.x = x;
  s.A = 1;
  s.B = lambda;
  s.prefactorSqrt = (QuadraticNumber(1) + QuadraticNumber(4) * x) * (QuadraticNumber(1) - QuadraticNumber(4) * x) *
                    (QuadraticNumber(1) - QuadraticNumber(8) * x);
  s.target = QuadraticNumber::sqrt_of(make_rational(6, N));
  return s;
}

/// Recovers x_N exactly from the modular function, solves the series identity for
/// lambda numerically, recognizes it (continued fractions, then {1, sqrt d}) and
/// re-verifies the identity at higher precision.
inline LambdaResult recover_lambda(std::shared_ptr<const SequenceDef> t24, long N, int sign, long digits) {
  const long work = digits + 20;
  const auto radicands = detail::candidate_radicands(N);
  HPReal xv = evaluate_modular_at_q("x24", table_q(N, sign, work), work);
  auto x = detail::recognize(xv, work - 10, radicands);
  if (!x) fail(ErrorKind::RationalizationFailed, "x_" + std::to_string(N) + " not recognized");

  PiSeriesSpec s0 = level24_pi_spec(t24, N, *x, 1), s1 = s0;
  const QuadraticNumber radQ = s0.prefactorSqrt;
  s0.A = 0;
  s0.prefactorSqrt = 1;
  s1.A = 1;
  s1.B = 0;
  s1.prefactorSqrt = 1;
  HPReal S0 = evaluate_sum(s0, work).value, S1 = evaluate_sum(s1, work).value;
  const long bits = S0.precision_bits();
  HPReal rhs = pi_target(*s0.target, work, bits) / hp_sqrt(quadratic_to_hp(radQ, bits));
  HPReal lam = (rhs - S1) / S0;

  std::vector<BigInt> lamRadicands = radicands;
  if (!x->is_rational()) lamRadicands = {x->radicand()};
  auto lambda = detail::recognize(lam, work - 10, lamRadicands);
  if (!lambda) fail(ErrorKind::RationalizationFailed, "lambda_" + std::to_string(N) + " not recognized");

  CheckReport check = check_pi_identity(level24_pi_spec(t24, N, *x, *lambda), digits + 10);
  if (!check.pass) fail(ErrorKind::RationalizationFailed, "recognized lambda_" + std::to_string(N) + " fails re-verification");
  return {*x, *lambda, check.agreedDigits};
}

}  // namespace holopi
