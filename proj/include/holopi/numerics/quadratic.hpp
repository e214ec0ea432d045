#pragma once

#include <string>

#include "holopi/numerics/rational.hpp"

namespace holopi {

/// rationalPart + surdPart * sqrt(radicand), radicand square-free; surdPart == 0 forces radicand 1.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const BigRational& r) : rational_(r) {}  // NOLINT(implicit)
  QuadraticNumber(long r) : rational_(r) {}                // NOLINT(implicit)

  QuadraticNumber(const BigRational& rational, const BigRational& surd, const BigInt& radicand)
      : rational_(rational), surd_(surd), radicand_(radicand) {
    if (radicand_ <= 0) fail(ErrorKind::InvalidArgument, "radicand must be positive");
    auto [outside, sf] = squarefree_split(radicand_);
    surd_ *= outside;
    radicand_ = sf;
    normalize();
  }

  /// sqrt(r) for r >= 0, written as (1/den) * sqrt(num*den) with the square part pulled out.
  static QuadraticNumber sqrt_of(const BigRational& r) {
    if (r < 0) fail(ErrorKind::NegativeInput, "sqrt of negative rational");
    if (r == 0) return {};
    BigInt n = r.get_num() * r.get_den();
    return QuadraticNumber(0, make_rational(BigInt(1), r.get_den()), n);
  }

  const BigRational& rational_part() const { return rational_; }
  const BigRational& surd_part() const { return surd_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return surd_ == 0; }

  QuadraticNumber conjugate() const {
    QuadraticNumber c = *this;
    c.surd_ = -c.surd_;
    return c;
  }

  /// v * conjugate(v), always rational.
  BigRational norm() const { return rational_ * rational_ - surd_ * surd_ * radicand_; }

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    BigInt d = common_radicand(a, b);
    return QuadraticNumber(a.rational_ + b.rational_, a.surd_ + b.surd_, d, Raw{});
  }
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
    BigInt d = common_radicand(a, b);
    return QuadraticNumber(a.rational_ - b.rational_, a.surd_ - b.surd_, d, Raw{});
  }
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    BigInt d = common_radicand(a, b);
    return QuadraticNumber(a.rational_ * b.rational_ + a.surd_ * b.surd_ * d,
                           a.rational_ * b.surd_ + a.surd_ * b.rational_, d, Raw{});
  }
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
    BigRational n = b.norm();
    if (n == 0) fail(ErrorKind::DivisionByZero, "division by zero quadratic number");
    QuadraticNumber num = a * b.conjugate();
    return QuadraticNumber(num.rational_ / n, num.surd_ / n, num.radicand_, Raw{});
  }
  QuadraticNumber operator-() const { return QuadraticNumber(-rational_, -surd_, radicand_, Raw{}); }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.rational_ == b.rational_ && a.surd_ == b.surd_ && a.radicand_ == b.radicand_;
  }

  std::string to_string() const {
    if (is_rational()) return rational_.get_str();
    std::string s = rational_ == 0 ? "" : rational_.get_str() + (surd_ > 0 ? "+" : "");
    return s + surd_.get_str() + "*sqrt(" + radicand_.get_str() + ")";
  }

 private:
  struct Raw {};
  QuadraticNumber(BigRational r, BigRational s, BigInt d, Raw)
      : rational_(std::move(r)), surd_(std::move(s)), radicand_(std::move(d)) {
    normalize();
  }

  void normalize() {
    if (radicand_ == 1) {
      rational_ += surd_;
      surd_ = 0;
    }
    if (surd_ == 0) radicand_ = 1;
  }

  static BigInt common_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.is_rational()) return b.radicand_;
    if (b.is_rational()) return a.radicand_;
    if (a.radicand_ != b.radicand_)
      fail(ErrorKind::MixedRadicand, "sqrt(" + a.radicand_.get_str() + ") vs sqrt(" + b.radicand_.get_str() + ")");
    return a.radicand_;
  }

  BigRational rational_{0};
  BigRational surd_{0};
  BigInt radicand_{1};
};

}  // namespace holopi
