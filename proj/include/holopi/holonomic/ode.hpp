#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "holopi/holonomic/recurrence.hpp"
#include "holopi/series/truncated_series.hpp"

namespace holopi {

/// sum_i coeffs[i](x) d^i z/dx^i = rhs(x) z, kept internally as the homogeneous
/// operator with coefficient of z equal to coeffs[0] - rhs.
class LODE {
 public:
  LODE(std::vector<Polynomial> coeffs, Polynomial rhs = {}) : c_(std::move(coeffs)) {
    if (c_.empty() || c_.back().is_zero()) fail(ErrorKind::InvalidArgument, "leading ODE coefficient is zero");
    c_[0] = c_[0] - rhs;
  }
  long order() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Polynomial>& coeffs() const { return c_; }
  long max_degree() const {
    long d = 0;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
  }

 private:
  std::vector<Polynomial> c_;
};

/// Falling factorial m (m-1) ... (m-i+1) as a polynomial in n with m = n + s.
inline Polynomial falling_factorial(const BigRational& s, long i) {
  Polynomial r = Polynomial::constant(1);
  for (long j = 0; j < i; ++j) r = r * Polynomial(std::vector<BigRational>{s - j, 1});
  return r;
}

/// Substitutes z = sum c_m x^m. A term p_{ij} x^j d^i shifts the index by s = i - j;
/// with n = N + max s the coefficient of x^N becomes
/// sum_l [ sum_{i-j = smax-l} p_{ij} (n-l)^{falling i} ] c(n-l).
inline PRecurrence ode_to_recurrence(const LODE& ode, bool remove_common_factor = false) {
  std::map<long, Polynomial> by_shift;
  long smax = -(1L << 30), smin = 1L << 30;
  for (long i = 0; i <= ode.order(); ++i) {
    const Polynomial& p = ode.coeffs()[i];
    for (long j = 0; j <= p.degree(); ++j) {
      if (p[j] == 0) continue;
      long s = i - j;
      smax = std::max(smax, s);
      smin = std::min(smin, s);
    }
  }
  PRecurrence rec;
  rec.coeffs.assign(static_cast<size_t>(smax - smin) + 1, Polynomial());
  for (long i = 0; i <= ode.order(); ++i) {
    const Polynomial& p = ode.coeffs()[i];
    for (long j = 0; j <= p.degree(); ++j) {
      if (p[j] == 0) continue;
      long l = smax - (i - j);
      rec.coeffs[l] = rec.coeffs[l] + p[j] * falling_factorial(BigRational(-l), i);
    }
  }
  while (rec.coeffs.size() > 1 && rec.coeffs.back().is_zero()) rec.coeffs.pop_back();
  rec.initial = {BigRational(1)};
  return remove_common_factor ? rec.without_common_factor() : rec.normalized();
}

/// L[s] truncated to the order that is provably exact: s.order - ode.order - maxdeg.
inline TruncatedSeries apply_ode(const LODE& ode, const TruncatedSeries& s) {
  const long r = ode.order(), dmax = ode.max_degree();
  if (s.order() < r + dmax + 5)
    fail(ErrorKind::OrderTooSmall, "series order " + std::to_string(s.order()) + " below " + std::to_string(r + dmax + 5));
  const long out = s.order() - r - dmax;
  TruncatedSeries acc(out);
  TruncatedSeries d = s;
  for (long i = 0; i <= r; ++i) {
    if (i) d = derivative(d);
    acc += TruncatedSeries::from_polynomial(ode.coeffs()[i], out) * d.truncate(out);
  }
  return acc;
}

}  // namespace holopi
