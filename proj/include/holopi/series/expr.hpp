#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holopi/series/truncated_series.hpp"

namespace holopi {

/// A finite sum of terms c * prod p_i(x)^{e_i} with rational exponents, e.g.
/// 4a(1+2x)(1-x) / (3(1-4x+8x^2) sqrt(1-4x)).
struct SeriesExpr {
  struct Factor {
    Polynomial base;
    BigRational exponent;
  };
  struct Term {
    BigRational coeff;
    std::vector<Factor> factors;
  };
  std::vector<Term> terms;

  static SeriesExpr constant(const BigRational& v) { return SeriesExpr{{Term{v, {}}}}; }
  static SeriesExpr zero() { return SeriesExpr{}; }
  bool is_zero() const { return terms.empty(); }

  TruncatedSeries to_series(long order) const {
    TruncatedSeries sum(order);
    for (const auto& t : terms) {
      TruncatedSeries prod = TruncatedSeries::constant(t.coeff, order);
      for (const auto& f : t.factors)
        prod *= series_pow_rational(TruncatedSeries::from_polynomial(f.base, order), f.exponent);
      sum += prod;
    }
    return sum;
  }

  /// Exact value at a rational point when every exponent is an integer.
  BigRational at(const BigRational& x) const {
    BigRational sum = 0;
    for (const auto& t : terms) {
      BigRational prod = t.coeff;
      for (const auto& f : t.factors) {
        if (f.exponent.get_den() != 1) fail(ErrorKind::InvalidArgument, "fractional exponent in exact evaluation");
        prod *= rational_pow(f.base(x), f.exponent.get_num().get_si());
      }
      sum += prod;
    }
    return sum;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& t : terms) {
      if (!s.empty()) s += " + ";
      s += t.coeff.get_str();
      for (const auto& f : t.factors) {
        s += "*(" + f.base.to_string() + ")";
        if (f.exponent != 1) s += "^(" + f.exponent.get_str() + ")";
      }
    }
    return s;
  }
};

}  // namespace holopi
