#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holopi/kernels/sequence.hpp"
#include "holopi/series/truncated_series.hpp"

namespace holopi {

/// Exact q-expansion q^0..q^N; the same container as x-series.
using QSeries = TruncatedSeries;

struct EtaFactor {
  long scale = 1;
  long multiplicity = 1;
};

/// prod_j (1 - q^{scale j}) truncated at the order.
inline QSeries euler_product(long scale, long order) {
  if (scale <= 0) fail(ErrorKind::InvalidArgument, "eta scale must be positive");
  QSeries p = QSeries::constant(1, order);
  for (long m = scale; m <= order; m += scale) {
    QSeries next = p;
    for (long i = m; i <= order; ++i) next.at(i) -= p[i - m];
    p = std::move(next);
  }
  return p;
}

/// prod eta(scale_i tau)^{mult_i}; the q-offset sum scale_i mult_i / 24 must be a
/// nonnegative integer and is absorbed into the expansion.
inline QSeries eta_quotient_expand(const std::vector<EtaFactor>& factors, long order) {
  long num = 0;
  for (const auto& f : factors) num += f.scale * f.multiplicity;
  if (num < 0 || num % 24 != 0)
    fail(ErrorKind::FractionalOffset, "eta quotient offset " + std::to_string(num) + "/24 is not a nonnegative integer");
  const long offset = num / 24;
  QSeries prod = QSeries::constant(1, order);
  for (const auto& f : factors) {
    if (f.multiplicity == 0) continue;
    prod *= series_pow_rational(euler_product(f.scale, order), f.multiplicity, 1);
  }
  return prod.shift(offset);
}

/// P(q^scale) = 1 - 24 sum sigma_1(m) q^{scale m}
inline QSeries eisenstein_P(long scale, long order) {
  if (scale <= 0) fail(ErrorKind::InvalidArgument, "Eisenstein scale must be positive");
  QSeries p = QSeries::constant(1, order);
  for (long m = 1; m * scale <= order; ++m) {
    long sigma = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) sigma += d;
    p.at(m * scale) = -24 * sigma;
  }
  return p;
}

/// sum_n c(n) x^n truncated at the order.
inline TruncatedSeries sequence_series(const SequenceDef& s, long order, const BigRational& scale = 1) {
  auto t = s.terms(order);
  BigRational r = 1;
  TruncatedSeries out(order);
  for (long n = 0; n <= order; ++n, r *= scale) out.at(n) = t[n] * r;
  return out;
}

/// f(-q): negate the odd coefficients.
inline QSeries negate_q(const QSeries& f) {
  QSeries r = f;
  for (long i = 1; i <= f.order(); i += 2) r.at(i) = -f[i];
  return r;
}

/// Level 24: z = (6P(q^12) - 3P(q^6) + 2P(q^4) - P(q^2))/4 + 2E, E = eta(2)eta(4)eta(6)eta(12), x = E/z.
struct Level24 {
  QSeries z, x;
};

inline Level24 level24_forms(long order) {
  QSeries E = eta_quotient_expand({{2, 1}, {4, 1}, {6, 1}, {12, 1}}, order);
  QSeries z = BigRational(1, 4) * (BigRational(6) * eisenstein_P(12, order) - BigRational(3) * eisenstein_P(6, order) +
                                   BigRational(2) * eisenstein_P(4, order) - eisenstein_P(2, order)) +
              BigRational(2) * E;
  return {z, E * inverse(z)};
}

/// Level 6: z = eta(1)^4 eta(3)^4 / (eta(2)^2 eta(6)^2), y = eta(2)^6 eta(6)^6 / (eta(1)^6 eta(3)^6).
struct Level6 {
  QSeries z, y;
};

inline Level6 level6_forms(long order) {
  return {eta_quotient_expand({{1, 4}, {3, 4}, {2, -2}, {6, -2}}, order),
          eta_quotient_expand({{2, 6}, {6, 6}, {1, -6}, {3, -6}}, order)};
}

struct QCheck {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> parts;
  void add(std::string name, bool ok) {
    parts.emplace_back(std::move(name), ok);
    pass = pass && ok;
  }
};

/// Sequences the modular identities are stated with.
struct QSequences {
  const SequenceDef* t24 = nullptr;
  const SequenceDef* t6 = nullptr;
  const SequenceDef* domb = nullptr;
  const SequenceDef* c3 = nullptr;
  const SequenceDef* v = nullptr;
};

namespace detail {

inline const SequenceDef& need(const SequenceDef* s, const char* name) {
  if (!s) fail(ErrorKind::CatalogError, std::string("q identity needs sequence ") + name);
  return *s;
}

/// sum_n c(n) sign^n x^{xPerN n} p(x)^{alpha n + beta} as an x-series.
inline TruncatedSeries weighted_series(const SequenceDef& s, long order, long sign, long xPerN, const Polynomial& p,
                                       long alpha, long beta) {
  TruncatedSeries base = TruncatedSeries::from_polynomial(p, order);
  TruncatedSeries step = series_pow_rational(base, alpha, 1);
  TruncatedSeries cur = series_pow_rational(base, beta, 1);
  TruncatedSeries out(order);
  auto t = s.terms(order);
  BigRational sg = 1;
  for (long n = 0; xPerN * n <= order; ++n) {
    out += (sg * t[n]) * cur.shift(xPerN * n);
    cur *= step;
    sg *= sign;
  }
  return out;
}

inline QCheck check_level6_chain(const QSequences& seqs, long order, long c, bool starred) {
  Level6 f = level6_forms(order);
  QSeries one = QSeries::constant(1, order);
  QSeries factor = one + BigRational(c) * f.y;
  QSeries Z = factor * f.z;
  QSeries x = f.y * inverse(factor);
  QCheck out;
  QSeries d1 = starred ? BigRational(1, 2) * (BigRational(3) * eisenstein_P(3, order) - eisenstein_P(1, order))
                       : BigRational(1, 2) * (BigRational(3) * eisenstein_P(6, order) - eisenstein_P(2, order));
  out.add("eisenstein", Z == d1);
  const SequenceDef& main = starred ? need(seqs.v, "v") : need(seqs.t6, "t6");
  out.add("sequence", series_compose(sequence_series(main, order), x) == Z);
  Polynomial lin({BigRational(1), BigRational(-c)});
  out.add("domb", series_compose(weighted_series(need(seqs.domb, "domb"), order, -1, 1, lin, -1, -1), x) == Z);
  TruncatedSeries c3 = starred ? weighted_series(need(seqs.c3, "c3"), order, 1, 1, lin, 2, 0)
                               : weighted_series(need(seqs.c3, "c3"), order, 1, 2, lin, 1, 0);
  out.add("c3", series_compose(c3, x) == Z);
  if (!starred) out.add("z-in-y", series_compose(sequence_series(need(seqs.domb, "domb"), order, -1), f.y) == f.z);
  return out;
}

}  // namespace detail

/// Exact q-expansion checks of the modular parameterizations; id in
/// {th, th2, x-symmetry, par, par1}.
inline QCheck verify_q_identity_detail(const std::string& id, long order, const QSequences& seqs) {
  QCheck out;
  if (id == "th" || id == "th2" || id == "x-symmetry") {
    Level24 f = level24_forms(order);
    if (id == "th") {
      out.add("z = sum t(n) x^n", series_compose(sequence_series(detail::need(seqs.t24, "t24"), order), f.x) == f.z);
    } else if (id == "th2") {
      Polynomial rad = Polynomial({1, 4}) * Polynomial({1, -4}) * Polynomial({1, -8});
      QSeries r = series_compose(TruncatedSeries::from_polynomial(rad, order), f.x);
      out.add("q dx/dq", apply_D(f.x) == f.z * f.x * series_pow_rational(r, 1, 2));
    } else {
      // x = q u with u(0) = 1: 1/x(q) + 1/x(-q) = q^{-1}(1/u(q) - 1/u(-q)), so the odd part of 1/u must be 2q
      QSeries u(order - 1);
      for (long i = 0; i < order; ++i) u.at(i) = f.x[i + 1];
      QSeries inv = inverse(u);
      QSeries diff = inv - negate_q(inv);
      out.add("1/x(q) + 1/x(-q) = 4", diff == QSeries::monomial(1, 4, order - 1));
    }
    return out;
  }
  if (id == "par") return detail::check_level6_chain(seqs, order, 4, false);
  if (id == "par1") return detail::check_level6_chain(seqs, order, 16, true);
  fail(ErrorKind::UnknownId, "unknown q identity '" + id + "'");
}

inline bool verify_q_identity(const std::string& id, long order, const QSequences& seqs) {
  return verify_q_identity_detail(id, order, seqs).pass;
}

}  // namespace holopi
