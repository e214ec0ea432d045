#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "holopi/kernels/binomial_kernel.hpp"
#include "holopi/numerics/pi.hpp"
#include "holopi/numerics/pslq.hpp"
#include "holopi/series/truncated_series.hpp"

namespace holopi {

/// P(x) + k Q(x) + n R(x) with integer coefficients.
struct SatelliteTriple {
  Polynomial P, Q, R;
  std::string kernelId;
  long nullspaceDimension = 1;

  /// Coefficients P_0..P_d, Q_0..Q_d, R_0..R_d for degree bound d.
  std::vector<BigRational> flat(long degree) const {
    std::vector<BigRational> v;
    for (const Polynomial* p : {&P, &Q, &R})
      for (long i = 0; i <= degree; ++i) v.push_back((*p)[i]);
    return v;
  }
  static SatelliteTriple from_flat(const IntVector& v, long degree, std::string kernelId) {
    auto part = [&](long off) {
      std::vector<BigRational> c;
      for (long i = 0; i <= degree; ++i) c.emplace_back(v[static_cast<size_t>(off + i)]);
      return Polynomial(std::move(c));
    };
    return {part(0), part(degree + 1), part(2 * (degree + 1)), std::move(kernelId)};
  }
  /// Primitive integer coefficients, first nonzero coefficient in P,Q,R order positive.
  SatelliteTriple normalized() const {
    long d = std::max({P.degree(), Q.degree(), R.degree(), 0L});
    SatelliteTriple t = from_flat(normalize_primitive(clear_denominators(flat(d))), d, kernelId);
    t.nullspaceDimension = nullspaceDimension;
    return t;
  }
  bool same_up_to_scaling(const SatelliteTriple& o) const {
    SatelliteTriple a = normalized(), b = o.normalized();
    return a.P == b.P && a.Q == b.Q && a.R == b.R;
  }
  std::string to_string() const {
    return "P = " + P.to_string() + ", Q = " + Q.to_string() + ", R = " + R.to_string();
  }
};

/// sum h x^{n+k}, sum k h x^{n+k}, sum n h x^{n+k}
struct SatelliteSeries {
  TruncatedSeries S0, Sk, Sn;
};

inline SatelliteSeries satellite_series(const BinomialKernel& h, long order) {
  SatelliteSeries s{TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order)};
  for (long n = 0; n <= order; ++n) {
    for (long k = std::max(0L, h.kMin.lower(n)); k <= h.kMax.upper(n) && n + k <= order; ++k) {
      BigRational v = h.eval(n, k);
      if (v == 0) continue;
      s.S0.at(n + k) += v;
      s.Sk.at(n + k) += v * k;
      s.Sn.at(n + k) += v * n;
    }
  }
  return s;
}

inline bool verify_satellite(const BinomialKernel& h, const SatelliteTriple& t, long truncation) {
  SatelliteSeries s = satellite_series(h, truncation);
  auto poly = [&](const Polynomial& p) { return TruncatedSeries::from_polynomial(p, truncation); };
  TruncatedSeries total = poly(t.P) * s.S0 + poly(t.Q) * s.Sk + poly(t.R) * s.Sn;
  return total.is_zero();
}

/// Undetermined coefficients: every x^m coefficient of sum_i x^i (a_i S0 + b_i Sk + c_i Sn)
/// up to the truncation gives one exact linear equation.
inline std::optional<SatelliteTriple> discover_exact(const BinomialKernel& h, long maxDegree, long truncation) {
  const long minTrunc = 3 * (maxDegree + 1) + 10;
  if (truncation < minTrunc)
    fail(ErrorKind::TruncationTooSmall, "truncation " + std::to_string(truncation) + " below " + std::to_string(minTrunc));
  SatelliteSeries s = satellite_series(h, truncation);
  const size_t cols = static_cast<size_t>(3 * (maxDegree + 1));
  RationalMatrix m;
  for (long e = 0; e <= truncation; ++e) {
    std::vector<BigRational> row(cols, BigRational(0));
    const TruncatedSeries* comp[3] = {&s.S0, &s.Sk, &s.Sn};
    for (long c = 0; c < 3; ++c)
      for (long i = 0; i <= maxDegree && i <= e; ++i) row[static_cast<size_t>(c * (maxDegree + 1) + i)] = (*comp[c])[e - i];
    m.push_back(std::move(row));
  }
  auto basis = nullspace(m, cols);
  if (basis.empty()) return std::nullopt;
  SatelliteTriple t = SatelliteTriple::from_flat(basis.front(), maxDegree, h.id).normalized();
  t.nullspaceDimension = static_cast<long>(basis.size());
  if (!verify_satellite(h, t, truncation + 10)) return std::nullopt;
  return t;
}

/// Values of the three double sums at a real point, from their exact x-expansions.
/// Terms are added until they drop below 10^-(digits+10) with ratios below 1 - 1/64;
/// terms that keep growing raise DivergentSample.
inline std::array<HPReal, 3> satellite_values(const BinomialKernel& h, const HPReal& x, long digits) {
  const long bits = x.precision_bits();
  const HPReal eps = HPReal::from_string("1e-" + std::to_string(digits + 10), bits);
  long order = 64;
  for (;;) {
    SatelliteSeries s = satellite_series(h, order);
    std::array<HPReal, 3> acc{HPReal(bits), HPReal(bits), HPReal(bits)};
    HPReal xp(1, bits);
    double prevMag = 0;
    int shrinking = 0, small = 0, growing = 0;
    for (long e = 0; e <= order; ++e) {
      HPReal t0 = HPReal(s.S0[e], bits) * xp;
      acc[0] += t0;
      acc[1] += HPReal(s.Sk[e], bits) * xp;
      acc[2] += HPReal(s.Sn[e], bits) * xp;
      double mag = t0.log10_abs();
      if (std::isfinite(mag) && std::isfinite(prevMag) && e > 0) {
        double ratio = mag - prevMag;
        shrinking = ratio < std::log10(1.0 - 1.0 / 64) ? shrinking + 1 : 0;
        growing = ratio > 0 ? growing + 1 : 0;
      }
      prevMag = mag;
      small = t0.abs() < eps ? small + 1 : 0;
      if (e >= 20 && small >= 5 && shrinking >= 5) return acc;
      if (e >= 30 && growing >= 10) fail(ErrorKind::DivergentSample, "double-sum terms grow at the sample point");
      xp *= x;
    }
    if (order >= 4096) fail(ErrorKind::DivergentSample, "double sums did not converge within 4096 terms");
    order *= 2;
  }
}

/// PSLQ on x*^i S0, x*^i Sk, x*^i Sn at x* = samplePoint * ln 2 (a transcendental point,
/// so only genuine polynomial relations survive), then exact confirmation.
inline std::optional<SatelliteTriple> discover_pslq(const BinomialKernel& h, long maxDegree, long digits,
                                                    const BigRational& samplePoint, long confirmOrder = 40) {
  if (digits < 30 * (maxDegree + 1))
    fail(ErrorKind::NoRelationFound, "precision " + std::to_string(digits) + " digits below " + std::to_string(30 * (maxDegree + 1)));
  const long bits = digits_to_bits(digits) + guard_bits(1000);
  HPReal ln2 = hp_log(HPReal(2, bits));
  HPReal x = HPReal(samplePoint, bits) * ln2;
  auto vals = satellite_values(h, x, digits);
  std::vector<HPReal> vec;
  for (int c = 0; c < 3; ++c) {
    HPReal xp(1, bits);
    for (long i = 0; i <= maxDegree; ++i) {
      vec.push_back(vals[c] * xp);
      xp *= x;
    }
  }
  PslqOptions opt;
  opt.accept_digits = digits / 2;
  auto rel = pslq(vec, opt);
  if (!rel) fail(ErrorKind::NoRelationFound, "PSLQ found no relation at " + std::to_string(digits) + " digits");
  SatelliteTriple t = SatelliteTriple::from_flat(*rel, maxDegree, h.id).normalized();
  if (!verify_satellite(h, t, confirmOrder)) fail(ErrorKind::NoRelationFound, "PSLQ candidate failed exact confirmation");
  return t;
}

}  // namespace holopi
