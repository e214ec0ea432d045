#pragma once

#include <string>
#include <vector>

#include "holopi/numerics/hpreal.hpp"
#include "holopi/series/laurent.hpp"
#include "holopi/series/polynomial.hpp"

namespace holopi {

/// P_m(X) = sum_k C(m,k) C(m+k,k) ((X-1)/2)^k at a rational point.
inline BigRational legendre(long m, const BigRational& X) {
  BigRational s = 0, u = (X - 1) / 2, pw = 1;
  for (long k = 0; k <= m; ++k) {
    s += BigRational(binomial(m, k) * binomial(m + k, k)) * pw;
    pw *= u;
  }
  return s;
}

struct RatfunCheck {
  bool pass = true;
  long failedAt = -1;
};

/// Both sides of the quadratic transformation
///   sum_k C(2k,k)^2 C(2n-2k,n-k)^2 / C(n,k) y^k
///     = (-16y/(1+y))^n sum_k C(k,n-k) C(2k,k)^2 (-(1+y)^2/(16y))^k
/// as polynomials in y (the right side is polynomial since k >= n/2 in its support).
inline Polynomial whipple_lhs(long n) {
  std::vector<BigRational> c(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    BigInt a = binomial(2 * k, k), b = binomial(2 * n - 2 * k, n - k);
    c[k] = make_rational(a * a * b * b, binomial(n, k));
  }
  return Polynomial(std::move(c));
}

inline Polynomial whipple_rhs(long n) {
  Polynomial sum, one_plus_y{1, 1}, y{0, 1};
  for (long k = (n + 1) / 2; k <= n; ++k) {
    BigInt c = binomial(k, n - k) * binomial(2 * k, k) * binomial(2 * k, k);
    BigRational coeff(c);
    if ((n + k) % 2) coeff = -coeff;
    BigInt p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, static_cast<unsigned long>(n - k));
    coeff *= p16;
    sum = sum + coeff * (y.pow(static_cast<unsigned long>(n - k)) * one_plus_y.pow(static_cast<unsigned long>(2 * k - n)));
  }
  return sum;
}

inline RatfunCheck verify_whipple(long nMax) {
  for (long n = 0; n <= nMax; ++n)
    if (!(whipple_lhs(n) == whipple_rhs(n))) return {false, n};
  return {};
}

/// z^m coefficient of sum_n (z/y)^n sum_k C(n-k,k) C(2k,k) C(2n-2k,n-k)^2 (y(y^2-1)/(4z))^k:
/// only n - k = m contributes, so n runs over m..2m.
inline LaurentSlice trans1_lhs(long m) {
  LaurentSlice acc;
  const LaurentSlice w = make_rational(1, 4) * LaurentSlice(1, {BigRational(-1), BigRational(0), BigRational(1)});
  for (long n = m; n <= 2 * m; ++n) {
    long k = n - m;
    BigInt b = binomial(n - k, k) * binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k) * binomial(2 * n - 2 * k, n - k);
    if (b == 0) continue;
    acc = acc + BigRational(b) * (LaurentSlice::monomial(-n) * w.pow(static_cast<unsigned long>(k)));
  }
  return acc;
}

/// C(2m,m)^2 P_m((y^2+1)/(2y)) with (X-1)/2 = (y - 2 + 1/y)/4.
inline LaurentSlice trans1_rhs(long m) {
  const LaurentSlice u = make_rational(1, 4) * LaurentSlice(-1, {BigRational(1), BigRational(-2), BigRational(1)});
  LaurentSlice p;
  for (long k = 0; k <= m; ++k)
    p = p + BigRational(binomial(m, k) * binomial(m + k, k)) * u.pow(static_cast<unsigned long>(k));
  BigInt c = binomial(2 * m, m);
  return BigRational(c * c) * p;
}

struct Trans1Slices {
  std::vector<LaurentSlice> lhs, rhs;
  bool equal = true;
  long firstMismatch = -1;
};

inline Trans1Slices expand_trans1(long zOrder) {
  Trans1Slices out;
  for (long m = 0; m <= zOrder; ++m) {
    out.lhs.push_back(trans1_lhs(m));
    out.rhs.push_back(trans1_rhs(m));
    if (out.equal && !(out.lhs.back() == out.rhs.back())) {
      out.equal = false;
      out.firstMismatch = m;
    }
  }
  return out;
}

struct Trans2Check {
  bool pass = true;
  long minAgreedDigits = 0;
  long failedAt = -1;
};

/// z^k coefficients of sum_n C(2n,n) w^n sum_k C(n,k)^2 C(2k,k) (4z/(y^2-1))^k, w = (y^2-1)/(4y^2),
/// summed numerically over n and compared with y C(2k,k)^2 P_{2k}(y).
inline Trans2Check verify_trans2_numeric(const BigRational& y, long zOrder, long digits) {
  if (y == 0 || y * y == 1) fail(ErrorKind::DivergentParameter, "y must avoid 0 and +-1");
  const BigRational w = (y * y - 1) / (4 * y * y);
  if (abs(w) >= make_rational(1, 4))
    fail(ErrorKind::DivergentParameter, "|w| = |" + w.get_str() + "| >= 1/4: the n-sums diverge");
  const BigRational v = 4 / (y * y - 1);
  const long bits = digits_to_bits(digits) + guard_bits(4000);
  const HPReal eps = HPReal::from_string("1e-" + std::to_string(digits + 10), bits);
  Trans2Check res;
  res.minAgreedDigits = digits;
  for (long k = 0; k <= zOrder; ++k) {
    const BigRational vk = BigInt(binomial(2 * k, k)) * rational_pow(v, k);
    HPReal sum(bits);
    BigRational wn = rational_pow(w, k);
    int small = 0;
    for (long n = k; n < 100000; ++n) {
      BigInt c = binomial(n, k);
      BigRational term = BigRational(binomial(2 * n, n) * c * c) * wn * vk;
      HPReal t(term, bits);
      sum += t;
      small = t.abs() < eps ? small + 1 : 0;
      if (n - k >= 20 && small >= 5) break;
      wn *= w;
    }
    BigInt cb = binomial(2 * k, k);
    HPReal rhs(y * BigRational(cb * cb) * legendre(2 * k, y), bits);
    long agreed = agreed_digits(sum, rhs, digits);
    res.minAgreedDigits = std::min(res.minAgreedDigits, agreed);
    if (agreed < digits && res.pass) {
      res.pass = false;
      res.failedAt = k;
    }
  }
  return res;
}

}  // namespace holopi
