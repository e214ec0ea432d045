#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "holopi/numerics/rational.hpp"

namespace holopi {

/// Dense univariate polynomial over Q, coefficients lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }  // NOLINT(implicit)
  Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }
  static Polynomial constant(const BigRational& v) { return Polynomial(std::vector<BigRational>{v}); }
  static Polynomial monomial(long degree, const BigRational& v = 1) {
    std::vector<BigRational> c(static_cast<size_t>(degree) + 1, BigRational(0));
    c.back() = v;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational operator[](long i) const { return i >= 0 && i < static_cast<long>(c_.size()) ? c_[i] : BigRational(0); }
  BigRational leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

  BigRational operator()(const BigRational& x) const {
    BigRational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()), BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const BigRational& s, const Polynomial& p) {
    Polynomial r = p;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned long e) const {
    Polynomial r = constant(1), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  /// p(n + s)
  Polynomial shift(const BigRational& s) const {
    Polynomial r, lin(std::vector<BigRational>{s, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
  }

  /// Quotient and remainder over Q.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<BigRational> q(std::max(0L, degree() - d.degree() + 1), BigRational(0));
    std::vector<BigRational> r = c_;
    for (long i = degree() - d.degree(); i >= 0; --i) {
      BigRational f = r[i + d.degree()] / d.leading();
      q[i] = f;
      for (long j = 0; j <= d.degree(); ++j) r[i + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Polynomial monic() const { return is_zero() ? *this : (BigRational(1) / leading()) * *this; }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
      const BigRational& v = c_[i];
      if (v == 0) continue;
      std::string mag = BigRational(abs(v)).get_str();
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      if (i == 0) {
        s += mag;
      } else {
        if (abs(v) != 1) s += mag + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRational> c_;
};

}  // namespace holopi
