#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "holopi/numerics/rational.hpp"

namespace holopi {

inline long digits_to_bits(long digits) { return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 1; }

/// Guard bits for a pipeline summing about termCount terms.
inline long guard_bits(long termCount) {
  double lg = std::log10(static_cast<double>(std::max(1L, termCount)));
  return static_cast<long>(std::ceil(3.33 * (10.0 + lg)));
}

/// Binary floating point value mantissa * 2^exponent at a fixed precision.
/// Binary operations run at the larger precision of the operands.
class HPReal {
 public:
  explicit HPReal(long bits = 64) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_zero(v_, 1);
  }
  HPReal(const BigRational& r, long bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
  }
  HPReal(const BigInt& z, long bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  HPReal(long value, long bits) {
    mpfr_init2(v_, clamp(bits));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  static HPReal from_string(const std::string& s, long bits) {
    HPReal r(bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) fail(ErrorKind::InvalidArgument, "bad real '" + s + "'");
    return r;
  }
  /// Exact value mantissa * 2^exponent, rounded to bits.
  static HPReal from_parts(const BigInt& mantissa, long exponent, long bits) {
    HPReal r(bits);
    mpfr_set_z_2exp(r.v_, mantissa.get_mpz_t(), exponent, MPFR_RNDN);
    return r;
  }

  HPReal(const HPReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HPReal(HPReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HPReal() { mpfr_clear(v_); }

  long precision_bits() const { return static_cast<long>(mpfr_get_prec(v_)); }

  /// Returns {mantissa, exponent} with value = mantissa * 2^exponent.
  std::pair<BigInt, long> parts() const {
    BigInt m;
    if (mpfr_zero_p(v_)) return {0, 0};
    long e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    return {m, e};
  }
  BigInt mantissa() const { return parts().first; }
  long exponent() const { return parts().second; }

  HPReal with_precision(long bits) const {
    HPReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// log10 |v|, or -inf for zero.
  double log10_abs() const {
    if (is_zero()) return -INFINITY;
    long e;
    double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(d)) + static_cast<double>(e) * 0.30102999566398120;
  }

  /// Decimal rendering with `digits` significant digits, round to nearest.
  std::string to_string(long digits) const {
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(1L, digits)), v_, MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    std::string out = neg ? "-" : "";
    if (e > 0 && e <= static_cast<long>(s.size())) {
      out += s.substr(0, e);
      if (static_cast<size_t>(e) < s.size()) out += "." + s.substr(e);
    } else if (e <= 0 && e > -10) {
      out += "0." + std::string(static_cast<size_t>(-e), '0') + s;
    } else {
      out += s.substr(0, 1) + "." + s.substr(1) + "e" + std::to_string(e - 1);
    }
    return out;
  }

  friend HPReal operator+(const HPReal& a, const HPReal& b) { return binary(a, b, mpfr_add); }
  friend HPReal operator-(const HPReal& a, const HPReal& b) { return binary(a, b, mpfr_sub); }
  friend HPReal operator*(const HPReal& a, const HPReal& b) { return binary(a, b, mpfr_mul); }
  friend HPReal operator/(const HPReal& a, const HPReal& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "HPReal division by zero");
    return binary(a, b, mpfr_div);
  }
  HPReal operator-() const {
    HPReal r(precision_bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  HPReal& operator+=(const HPReal& o) { return *this = *this + o; }
  HPReal& operator-=(const HPReal& o) { return *this = *this - o; }
  HPReal& operator*=(const HPReal& o) { return *this = *this * o; }
  HPReal& operator/=(const HPReal& o) { return *this = *this / o; }

  friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  HPReal abs() const {
    HPReal r(precision_bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  /// Nearest integer.
  BigInt round() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }
  BigInt floor() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static mpfr_prec_t clamp(long bits) { return static_cast<mpfr_prec_t>(std::max<long>(bits, MPFR_PREC_MIN)); }

  template <class Op>
  static HPReal binary(const HPReal& a, const HPReal& b, Op op) {
    HPReal r(std::max(a.precision_bits(), b.precision_bits()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

inline HPReal hp_sqrt(const HPReal& v) {
  if (v.sign() < 0) fail(ErrorKind::NegativeInput, "hp_sqrt of negative value");
  HPReal r(v.precision_bits());
  mpfr_sqrt(r.raw(), v.raw(), MPFR_RNDN);
  return r;
}

inline HPReal hp_exp(const HPReal& v) {
  HPReal r(v.precision_bits());
  mpfr_exp(r.raw(), v.raw(), MPFR_RNDN);
  return r;
}

inline HPReal hp_log(const HPReal& v) {
  if (v.sign() <= 0) fail(ErrorKind::NegativeInput, "hp_log of non-positive value");
  HPReal r(v.precision_bits());
  mpfr_log(r.raw(), v.raw(), MPFR_RNDN);
  return r;
}

inline HPReal hp_pow(const HPReal& v, long e) {
  HPReal r(v.precision_bits());
  mpfr_pow_si(r.raw(), v.raw(), e, MPFR_RNDN);
  return r;
}

/// Number of leading decimal digits on which a and b agree (relative), capped at cap.
inline long agreed_digits(const HPReal& a, const HPReal& b, long cap) {
  HPReal diff = (a - b).abs();
  if (diff.is_zero()) return cap;
  double scale = std::max(a.log10_abs(), b.log10_abs());
  if (!std::isfinite(scale)) scale = 0;
  double rel = diff.log10_abs() - scale;
  long d = static_cast<long>(std::floor(-rel));
  return std::clamp(d, 0L, cap);
}

}  // namespace holopi
