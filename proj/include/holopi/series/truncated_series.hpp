#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "holopi/series/polynomial.hpp"

namespace holopi {

/// Power series c_0 + c_1 x + ... + c_N x^N known exactly up to order N.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(long order) : c_(static_cast<size_t>(std::max(0L, order)) + 1, BigRational(0)), order_(order) {
    if (order < 0) fail(ErrorKind::InvalidArgument, "negative truncation order");
  }
  TruncatedSeries(std::vector<BigRational> coeffs, long order) : TruncatedSeries(order) {
    for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }
  static TruncatedSeries constant(const BigRational& v, long order) {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static TruncatedSeries monomial(long power, const BigRational& v, long order) {
    TruncatedSeries s(order);
    if (power >= 0 && power <= order) s.c_[power] = v;
    return s;
  }
  static TruncatedSeries from_polynomial(const Polynomial& p, long order) {
    TruncatedSeries s(order);
    for (long i = 0; i <= std::min(p.degree(), order); ++i) s.c_[i] = p[i];
    return s;
  }
  /// sum_{n<=order} f(n) x^n
  template <class F>
  static TruncatedSeries generate(long order, F&& f) {
    TruncatedSeries s(order);
    for (long n = 0; n <= order; ++n) s.c_[n] = f(n);
    return s;
  }

  long order() const { return order_; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  const BigRational& operator[](long i) const {
    if (i < 0 || i > order_) fail(ErrorKind::OrderExceeded, "coefficient " + std::to_string(i) + " beyond order " + std::to_string(order_));
    return c_[i];
  }
  BigRational& at(long i) {
    if (i < 0 || i > order_) fail(ErrorKind::OrderExceeded, "coefficient " + std::to_string(i) + " beyond order " + std::to_string(order_));
    return c_[i];
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& v) { return v == 0; });
  }
  /// Index of the first nonzero coefficient, or nullopt for the zero series.
  std::optional<long> valuation() const {
    for (long i = 0; i <= order_; ++i)
      if (c_[i] != 0) return i;
    return std::nullopt;
  }

  TruncatedSeries truncate(long order) const {
    if (order > order_) fail(ErrorKind::OrderExceeded, "cannot extend a series from order " + std::to_string(order_) + " to " + std::to_string(order));
    return TruncatedSeries(std::vector<BigRational>(c_.begin(), c_.begin() + order + 1), order);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    long o = std::min(a.order_, b.order_);
    TruncatedSeries r(o);
    for (long i = 0; i <= o; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    long o = std::min(a.order_, b.order_);
    TruncatedSeries r(o);
    for (long i = 0; i <= o; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend TruncatedSeries operator*(const BigRational& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    long o = std::min(a.order_, b.order_);
    TruncatedSeries r(o);
    for (long i = 0; i <= o; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; i + j <= o; ++j) {
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Multiply by x^k, keeping the order.
  TruncatedSeries shift(long k) const {
    TruncatedSeries r(order_);
    for (long i = 0; i + k <= order_; ++i)
      if (i + k >= 0) r.c_[i + k] = c_[i];
    return r;
  }

  /// Exact equality up to `order`; refuses to compare past either operand's valid order.
  bool equals_to(const TruncatedSeries& o, long order) const {
    if (order > order_ || order > o.order_)
      fail(ErrorKind::OrderExceeded, "comparison at order " + std::to_string(order) + " exceeds known orders " +
                                         std::to_string(order_) + ", " + std::to_string(o.order_));
    for (long i = 0; i <= order; ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }
  /// First index where the two series differ, up to the smaller order.
  std::optional<long> first_difference(const TruncatedSeries& o) const {
    long m = std::min(order_, o.order_);
    for (long i = 0; i <= m; ++i)
      if (c_[i] != o.c_[i]) return i;
    return std::nullopt;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  std::string to_string(long terms = 8) const {
    std::string s;
    for (long i = 0; i <= std::min(order_, terms - 1); ++i) {
      if (i) s += ", ";
      s += c_[i].get_str();
    }
    if (order_ >= terms) s += ", ...";
    return "[" + s + "] + O(x^" + std::to_string(order_ + 1) + ")";
  }

 private:
  std::vector<BigRational> c_{BigRational(0)};
  long order_ = 0;
};

/// Multiplicative inverse; needs an invertible constant term.
inline TruncatedSeries inverse(const TruncatedSeries& a) {
  if (a[0] == 0) fail(ErrorKind::DivisionByZero, "series with zero constant term is not invertible");
  const long o = a.order();
  TruncatedSeries r(o);
  BigRational inv0 = BigRational(1) / a[0];
  r.at(0) = inv0;
  for (long n = 1; n <= o; ++n) {
    BigRational acc = 0;
    for (long k = 1; k <= n; ++k)
      if (a[k] != 0) acc += a[k] * r[n - k];
    r.at(n) = -acc * inv0;
  }
  return r;
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

/// D = x d/dx
inline TruncatedSeries apply_D(const TruncatedSeries& s) {
  TruncatedSeries r(s.order());
  for (long n = 1; n <= s.order(); ++n) r.at(n) = s[n] * n;
  return r;
}

/// d/dx; the result is known to one order less.
inline TruncatedSeries derivative(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries(0);
  TruncatedSeries r(s.order() - 1);
  for (long n = 1; n <= s.order(); ++n) r.at(n - 1) = s[n] * n;
  return r;
}

/// outer(inner(x)) by Horner's rule; inner must vanish at 0. Order is min(outer, inner).
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != 0) fail(ErrorKind::NonzeroConstantTerm, "inner series must have zero constant term");
  const long o = std::min(outer.order(), inner.order());
  TruncatedSeries in = inner.truncate(o);
  TruncatedSeries r(o);
  for (long n = o; n >= 0; --n) {
    r = r * in;
    r.at(0) += outer[n];
  }
  return r;
}

/// base^(num/den). Integer exponents need an invertible constant term; fractional
/// ones need c0 = 1, or c0 a perfect den-th power of a rational, which is factored out.
inline TruncatedSeries series_pow_rational(const TruncatedSeries& base, long num, long den) {
  if (den <= 0) fail(ErrorKind::InvalidArgument, "exponent denominator must be positive");
  BigRational alpha = make_rational(num, den);
  num = alpha.get_num().get_si();
  den = alpha.get_den().get_si();
  const long o = base.order();
  if (den == 1) {
    if (num >= 0) {
      TruncatedSeries r = TruncatedSeries::constant(1, o), b = base;
      for (unsigned long e = static_cast<unsigned long>(num); e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
      }
      return r;
    }
    return series_pow_rational(inverse(base), -num, 1);
  }
  BigRational c0 = base[0];
  if (c0 != 1) {
    auto root = c0 > 0 ? rational_root(c0, static_cast<unsigned long>(den)) : std::nullopt;
    if (!root) fail(ErrorKind::NonUnitConstantTerm, "fractional power needs constant term 1 (got " + c0.get_str() + ")");
    TruncatedSeries unit = (BigRational(1) / c0) * base;
    return rational_pow(*root, num) * series_pow_rational(unit, num, den);
  }
  // n g_n = sum_{k=1}^{n} (alpha k - (n - k)) f_k g_{n-k}
  TruncatedSeries g(o);
  g.at(0) = 1;
  for (long n = 1; n <= o; ++n) {
    BigRational acc = 0;
    for (long k = 1; k <= n; ++k)
      if (base[k] != 0) acc += (alpha * k - (n - k)) * base[k] * g[n - k];
    g.at(n) = acc / n;
  }
  return g;
}

inline TruncatedSeries series_pow_rational(const TruncatedSeries& base, const BigRational& e) {
  return series_pow_rational(base, e.get_num().get_si(), e.get_den().get_si());
}

}  // namespace holopi
