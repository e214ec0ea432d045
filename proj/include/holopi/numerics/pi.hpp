#pragma once

#include <cmath>

#include "holopi/numerics/hpreal.hpp"
#include "holopi/numerics/quadratic.hpp"

namespace holopi {

namespace detail {

// Binary splitting state for sum_k a(k)/b(k) * prod_{j<=k} p(j)/q(j).
struct ArctanSplit {
  BigInt p, q, b, t;
};

// Series for m*arctan(1/m) = sum_k (-1)^k / ((2k+1) m^(2k)), terms k in [lo, hi).
inline ArctanSplit arctan_split(long lo, long hi, const BigInt& m2) {
  if (hi - lo == 1) {
    ArctanSplit s;
    s.p = lo == 0 ? BigInt(1) : BigInt(-1);
    s.q = lo == 0 ? BigInt(1) : m2;
    s.b = 2 * lo + 1;
    s.t = s.p;
    return s;
  }
  long mid = lo + (hi - lo) / 2;
  ArctanSplit l = arctan_split(lo, mid, m2);
  ArctanSplit r = arctan_split(mid, hi, m2);
  ArctanSplit s;
  s.p = l.p * r.p;
  s.q = l.q * r.q;
  s.b = l.b * r.b;
  s.t = r.b * r.q * l.t + l.b * l.p * r.t;
  return s;
}

}  // namespace detail

/// arctan(1/m) as an exact rational partial sum whose truncation error is below 10^-digits.
inline BigRational arctan_inverse(long m, long digits) {
  long terms = static_cast<long>(std::ceil((digits + 2) * std::log(10.0) / (2.0 * std::log(static_cast<double>(m))))) + 2;
  BigInt m2 = BigInt(m) * m;
  detail::ArctanSplit s = detail::arctan_split(0, terms, m2);
  return make_rational(s.t, s.b * s.q * m);
}

/// pi with absolute error below 10^-digits, from Machin's formula
/// pi = 16 arctan(1/5) - 4 arctan(1/239), each arctan summed by binary splitting.
inline HPReal pi_oracle(long digits) {
  if (digits < 1) fail(ErrorKind::InvalidArgument, "pi_oracle needs digits >= 1");
  long work = digits + 5;
  BigRational pi = 16 * arctan_inverse(5, work) - 4 * arctan_inverse(239, work);
  return HPReal(pi, digits_to_bits(digits) + 32);
}

/// rational + surd*sqrt(d) with relative error below 2^(1-bits).
inline HPReal quadratic_to_hp(const QuadraticNumber& v, long bits) {
  long work = bits + 32;
  if (v.is_rational()) return HPReal(v.rational_part(), bits);
  HPReal root = hp_sqrt(HPReal(v.radicand(), work));
  HPReal surd = HPReal(v.surd_part(), work) * root;
  HPReal rat(v.rational_part(), work);
  bool cancels = (v.rational_part() > 0) != (v.surd_part() > 0) && v.rational_part() != 0;
  HPReal out = cancels ? HPReal(v.norm(), work) / (rat - surd) : rat + surd;
  return out.with_precision(bits);
}

}  // namespace holopi
