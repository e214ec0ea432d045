#pragma once

#include <string>
#include <vector>

#include "holopi/numerics/linalg.hpp"
#include "holopi/series/polynomial.hpp"

namespace holopi {

/// sum_{i=0}^{s} p_i(n) c(n - i) = 0, with c(n) = 0 for n < 0 and
/// c(0..initial.size()-1) given.
struct PRecurrence {
  std::vector<Polynomial> coeffs;
  std::vector<BigRational> initial;

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  long max_degree() const {
    long d = 0;
    for (const auto& p : coeffs) d = std::max(d, p.degree());
    return d;
  }

  /// From (lead)(n) c(n+1) = sum_i rhs_i(n) c(n-i), i = 0..s-1 (the usual printed shape).
  static PRecurrence from_forward_form(const Polynomial& lead, const std::vector<Polynomial>& rhs,
                                       std::vector<BigRational> initial) {
    PRecurrence r;
    r.coeffs.push_back(lead.shift(-1));
    for (const auto& q : rhs) r.coeffs.push_back(-q.shift(-1));
    r.initial = std::move(initial);
    return r;
  }

  /// Residual sum_i p_i(n) c(n-i) for a known term list.
  BigRational residual(const std::vector<BigRational>& terms, long n) const {
    BigRational acc = 0;
    for (long i = 0; i <= order(); ++i) {
      long idx = n - i;
      if (idx >= 0) acc += coeffs[i](BigRational(n)) * terms[idx];
    }
    return acc;
  }

  /// Extends `terms` (which must start with the initial values) up to index n.
  void extend(std::vector<BigRational>& terms, long n) const {
    if (terms.empty()) terms = initial;
    for (long m = static_cast<long>(terms.size()); m <= n; ++m) {
      BigRational lead = coeffs[0](BigRational(m));
      if (lead == 0) fail(ErrorKind::LeadingCoefficientZero, "leading coefficient vanishes at n = " + std::to_string(m));
      BigRational acc = 0;
      for (long i = 1; i <= order(); ++i)
        if (m - i >= 0) acc += coeffs[i](BigRational(m)) * terms[m - i];
      terms.push_back(-acc / lead);
    }
  }

  std::vector<BigRational> terms(long upTo) const {
    std::vector<BigRational> t;
    extend(t, upTo);
    t.resize(static_cast<size_t>(upTo) + 1);
    return t;
  }

  /// Divides by the content of all coefficients so they become coprime integer
  /// polynomials, with positive leading coefficient of p_0.
  PRecurrence normalized() const {
    std::vector<BigRational> flat;
    for (const auto& p : coeffs)
      for (const auto& c : p.coeffs()) flat.push_back(c);
    IntVector ints = clear_denominators(flat);
    BigInt g = 0;
    for (const auto& v : ints) g = gcd(g, v);
    PRecurrence r = *this;
    if (g == 0) return r;
    BigInt l = 1;
    for (const auto& c : flat) l = lcm(l, BigInt(c.get_den()));
    BigRational scale = make_rational(l, g);
    if (coeffs[0].leading() < 0) scale = -scale;
    for (auto& p : r.coeffs) p = scale * p;
    return r;
  }

  /// Removes a common polynomial factor shared by all coefficients.
  PRecurrence without_common_factor() const {
    Polynomial g;
    for (const auto& p : coeffs) g = gcd(g, p);
    PRecurrence r = *this;
    if (g.degree() > 0)
      for (auto& p : r.coeffs) p = p.divmod(g).first;
    return r.normalized();
  }

  /// Same operator up to a nonzero constant factor.
  bool proportional_to(const PRecurrence& o) const {
    if (coeffs.size() != o.coeffs.size()) return false;
    PRecurrence a = normalized(), b = o.normalized();
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      if (!(a.coeffs[i] == b.coeffs[i])) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (long i = 0; i <= order(); ++i) {
      if (coeffs[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs[i].to_string("n") + ")*c(n" + (i ? "-" + std::to_string(i) : "") + ")";
    }
    return s + " = 0";
  }
};

}  // namespace holopi
