#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "holopi/error.hpp"

namespace holopi {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

/// Accepts "p", "-p", "p/q".
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::InvalidArgument, "not a rational: '" + s + "'");
  }
}

inline std::string to_string(const BigRational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// C(m, j) with C(m, j) = 0 for j < 0 or j > m >= 0. Negative m is a caller error.
inline BigInt binomial(long m, long j) {
  if (j < 0 || m < 0 || j > m) {
    if (m < 0 && j >= 0) fail(ErrorKind::InvalidArgument, "binomial with negative top inside support");
    return 0;
  }
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
  return r;
}

inline BigRational rational_pow(const BigRational& base, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (base == 0) fail(ErrorKind::DivisionByZero, "0 to a negative power");
    return rational_pow(BigRational(1) / base, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

/// Exact k-th root of a rational if it exists.
inline std::optional<BigRational> rational_root(const BigRational& r, unsigned long k) {
  if (k == 1) return r;
  if (r < 0 && k % 2 == 0) return std::nullopt;
  BigInt num, den;
  if (mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), k) == 0) return std::nullopt;
  return make_rational(num, den);
}

/// n = square * squarefree, returns {sqrt(square), squarefree}. n > 0.
inline std::pair<BigInt, BigInt> squarefree_split(const BigInt& n) {
  if (n <= 0) fail(ErrorKind::InvalidArgument, "squarefree_split needs a positive integer");
  BigInt rest = n, outside = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    BigInt pp = p * p;
    while (rest % pp == 0) {
      rest /= pp;
      outside *= p;
    }
    if (p > 1000000) break;  // catalog radicands are small
  }
  return {outside, rest};
}

inline long floor_div(const BigRational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

inline long ceil_div(const BigRational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

}  // namespace holopi
