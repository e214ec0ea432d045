#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "holopi/numerics/hpreal.hpp"
#include "holopi/numerics/linalg.hpp"

namespace holopi {

struct PslqOptions {
  long max_iterations = 10000;
  /// Relation accepted when |y_j| < 10^-accept_digits (relative to |x|).
  long accept_digits = 0;
};

/// Integer relation search (Ferguson-Bailey PSLQ, gamma = 2/sqrt(3)).
/// Returns c with sum c_i x_i ~ 0, or nullopt when the iteration cap is hit
/// or the relation bound exceeds what the working precision supports.
inline std::optional<IntVector> pslq(const std::vector<HPReal>& x, PslqOptions opt = {}) {
  const size_t n = x.size();
  if (n < 2) return std::nullopt;
  long bits = 0;
  for (const auto& v : x) bits = std::max(bits, v.precision_bits());
  const long digits = static_cast<long>(bits * 0.30103);
  if (opt.accept_digits <= 0) opt.accept_digits = digits / 2;

  auto R = [bits](long v) { return HPReal(v, bits); };
  const HPReal gamma = hp_sqrt(R(4) / R(3));
  const HPReal threshold = HPReal::from_string("1e-" + std::to_string(opt.accept_digits), bits);

  HPReal norm = R(0);
  for (const auto& v : x) norm += v * v;
  norm = hp_sqrt(norm);
  if (norm.is_zero()) return std::nullopt;

  std::vector<HPReal> y;
  for (const auto& v : x) y.push_back(v.with_precision(bits) / norm);

  // For exact zeros the trivial relation e_i is the answer.
  for (size_t i = 0; i < n; ++i) {
    if (y[i].abs() < threshold) {
      IntVector e(n, 0);
      e[i] = 1;
      return e;
    }
  }

  std::vector<HPReal> s(n, R(0));
  for (size_t k = 0; k < n; ++k) {
    HPReal acc = R(0);
    for (size_t j = k; j < n; ++j) acc += y[j] * y[j];
    s[k] = hp_sqrt(acc);
  }

  std::vector<std::vector<HPReal>> H(n, std::vector<HPReal>(n - 1, R(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n - 1 && j <= i; ++j) {
      if (i == j) {
        H[i][j] = s[j + 1] / s[j];
      } else {
        H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }

  std::vector<IntVector> A(n, IntVector(n, 0)), B(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  auto reduce_row = [&](size_t i, size_t jmax) {
    for (size_t jj = jmax + 1; jj-- > 0;) {
      if (H[jj][jj].is_zero()) continue;
      BigInt t = (H[i][jj] / H[jj][jj]).round();
      if (t == 0) continue;
      HPReal tr(t, bits);
      y[jj] += tr * y[i];
      for (size_t k = 0; k <= jj; ++k) H[i][k] -= tr * H[jj][k];
      for (size_t k = 0; k < n; ++k) {
        A[i][k] -= t * A[jj][k];
        B[k][jj] += t * B[k][i];
      }
    }
  };

  for (size_t i = 1; i < n; ++i) reduce_row(i, i - 1);

  const BigInt max_entry = BigInt(1) << static_cast<unsigned long>(std::max(8L, bits / 2));
  for (long iter = 0; iter < opt.max_iterations; ++iter) {
    size_t m = 0;
    HPReal best = R(-1);
    HPReal gpow = gamma;
    for (size_t i = 0; i < n - 1; ++i) {
      HPReal v = gpow * H[i][i].abs();
      if (v > best) {
        best = v;
        m = i;
      }
      gpow *= gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    std::swap(H[m], H[m + 1]);
    for (size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

    if (m < n - 2) {
      HPReal t0 = hp_sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      if (t0.is_zero()) return std::nullopt;
      HPReal t1 = H[m][m] / t0, t2 = H[m][m + 1] / t0;
      for (size_t i = m; i < n; ++i) {
        HPReal t3 = H[i][m], t4 = H[i][m + 1];
        H[i][m] = t1 * t3 + t2 * t4;
        H[i][m + 1] = -(t2 * t3) + t1 * t4;
      }
    }
    for (size_t i = m + 1; i < n; ++i) reduce_row(i, std::min(i - 1, m + 1));

    for (size_t j = 0; j < n; ++j) {
      if (y[j].abs() < threshold) {
        IntVector rel(n);
        for (size_t k = 0; k < n; ++k) rel[k] = B[k][j];
        if (max_abs(rel) == 0) continue;
        return normalize_primitive(rel);
      }
    }
    for (size_t i = 0; i < n; ++i) {
      if (max_abs(A[i]) > max_entry) return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace holopi
