#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "holopi/numerics/rational.hpp"

namespace holopi {

/// Finitely supported Laurent polynomial sum_{e=minExp}^{maxExp} c_e y^e.
class LaurentSlice {
 public:
  LaurentSlice() = default;
  LaurentSlice(long min_exp, std::vector<BigRational> coeffs) : min_(min_exp), c_(std::move(coeffs)) { trim(); }
  static LaurentSlice constant(const BigRational& v) { return LaurentSlice(0, {v}); }
  static LaurentSlice monomial(long e, const BigRational& v = 1) { return LaurentSlice(e, {v}); }

  long min_exp() const { return min_; }
  long max_exp() const { return min_ + static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigRational operator[](long e) const {
    long i = e - min_;
    return i >= 0 && i < static_cast<long>(c_.size()) ? c_[i] : BigRational(0);
  }

  friend LaurentSlice operator+(const LaurentSlice& a, const LaurentSlice& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.min_, b.min_), hi = std::max(a.max_exp(), b.max_exp());
    std::vector<BigRational> c(static_cast<size_t>(hi - lo + 1), BigRational(0));
    for (long e = a.min_; e <= a.max_exp(); ++e) c[e - lo] += a[e];
    for (long e = b.min_; e <= b.max_exp(); ++e) c[e - lo] += b[e];
    return LaurentSlice(lo, std::move(c));
  }
  LaurentSlice operator-() const {
    LaurentSlice r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend LaurentSlice operator-(const LaurentSlice& a, const LaurentSlice& b) { return a + (-b); }
  friend LaurentSlice operator*(const LaurentSlice& a, const LaurentSlice& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return LaurentSlice(a.min_ + b.min_, std::move(c));
  }
  friend LaurentSlice operator*(const BigRational& s, const LaurentSlice& a) { return constant(s) * a; }
  LaurentSlice pow(unsigned long e) const {
    LaurentSlice r = constant(1), b = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * b;
      if (e > 1) b = b * b;
    }
    return r;
  }
  friend bool operator==(const LaurentSlice& a, const LaurentSlice& b) {
    return a.is_zero() ? b.is_zero() : (a.min_ == b.min_ && a.c_ == b.c_);
  }

  std::string to_string(const std::string& var = "y") const {
    if (is_zero()) return "0";
    std::string s;
    for (long e = max_exp(); e >= min_; --e) {
      BigRational v = (*this)[e];
      if (v == 0) continue;
      if (!s.empty()) s += " + ";
      s += v.get_str();
      if (e != 0) s += "*" + var + "^" + std::to_string(e);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      min_ = 0;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    min_ += static_cast<long>(lead);
  }
  long min_ = 0;
  std::vector<BigRational> c_;
};

}  // namespace holopi
