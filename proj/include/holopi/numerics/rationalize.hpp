#pragma once

#include <optional>

#include "holopi/numerics/pi.hpp"
#include "holopi/numerics/pslq.hpp"

namespace holopi {

/// Continued-fraction recognition: the first convergent p/q with q <= max_den and
/// |v - p/q| < 10^-tol_digits.
inline std::optional<BigRational> rationalize(const HPReal& v, long tol_digits, const BigInt& max_den) {
  const long bits = v.precision_bits();
  const HPReal tol = HPReal::from_string("1e-" + std::to_string(tol_digits), bits);
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  HPReal rest = v;
  for (int step = 0; step < 400; ++step) {
    BigInt a = rest.floor();
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) return std::nullopt;
    BigRational cand = make_rational(p2, q2);
    if ((HPReal(cand, bits) - v).abs() < tol) return cand;
    HPReal frac = rest - HPReal(a, bits);
    if (frac.is_zero()) return cand;
    rest = HPReal(1, bits) / frac;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

/// Finds v = r + s*sqrt(d) by an integer relation on (v, 1, sqrt(d)).
inline std::optional<QuadraticNumber> recognize_quadratic(const HPReal& v, const BigInt& radicand, long tol_digits) {
  const long bits = v.precision_bits();
  HPReal root = hp_sqrt(HPReal(radicand, bits));
  PslqOptions opt;
  opt.accept_digits = tol_digits;
  auto rel = pslq({v, HPReal(1, bits), root}, opt);
  if (!rel || (*rel)[0] == 0) return std::nullopt;
  const IntVector& c = *rel;
  QuadraticNumber q(make_rational(-c[1], c[0]), make_rational(-c[2], c[0]), radicand);
  const HPReal tol = HPReal::from_string("1e-" + std::to_string(tol_digits), bits);
  if ((quadratic_to_hp(q, bits) - v).abs() > tol) return std::nullopt;
  return q;
}

}  // namespace holopi
