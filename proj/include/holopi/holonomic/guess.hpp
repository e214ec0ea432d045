#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holopi/holonomic/recurrence.hpp"

namespace holopi {

/// Smallest (order, then degree) recurrence annihilating every supplied term.
/// Unknowns are the coefficients of p_i(n) = sum_d a_{i,d} n^d; each index
/// n >= order contributes one exact equation.
inline std::optional<PRecurrence> guess_recurrence(const std::vector<BigRational>& terms, long maxOrder, long maxDegree) {
  const long need = (maxOrder + 1) * (maxDegree + 1) + maxOrder + 10;
  if (static_cast<long>(terms.size()) < need)
    fail(ErrorKind::InsufficientTerms, "need " + std::to_string(need) + " terms, got " + std::to_string(terms.size()));
  const long len = static_cast<long>(terms.size());
  for (long order = 1; order <= maxOrder; ++order) {
    for (long degree = 0; degree <= maxDegree; ++degree) {
      const size_t cols = static_cast<size_t>((order + 1) * (degree + 1));
      RationalMatrix m;
      for (long n = order; n < len; ++n) {
        std::vector<BigRational> row(cols, BigRational(0));
        for (long i = 0; i <= order; ++i) {
          BigRational npow = 1;
          for (long d = 0; d <= degree; ++d) {
            row[static_cast<size_t>(i * (degree + 1) + d)] = npow * terms[n - i];
            npow *= n;
          }
        }
        m.push_back(std::move(row));
      }
      auto basis = nullspace(m, cols);
      for (const auto& v : basis) {
        PRecurrence rec;
        for (long i = 0; i <= order; ++i) {
          std::vector<BigRational> c;
          for (long d = 0; d <= degree; ++d) c.emplace_back(v[static_cast<size_t>(i * (degree + 1) + d)]);
          rec.coeffs.emplace_back(std::move(c));
        }
        if (rec.coeffs[0].is_zero()) continue;
        rec.initial.assign(terms.begin(), terms.begin() + order);
        return rec.normalized();
      }
    }
  }
  return std::nullopt;
}

}  // namespace holopi
