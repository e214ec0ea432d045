#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "holopi/numerics/rational.hpp"

namespace holopi {

using IntVector = std::vector<BigInt>;
using RationalMatrix = std::vector<std::vector<BigRational>>;

inline BigInt max_abs(const IntVector& v) {
  BigInt m = 0;
  for (const auto& x : v) m = std::max<BigInt>(m, abs(x));
  return m;
}

/// Divide by the gcd of the entries and make the first nonzero entry positive.
inline IntVector normalize_primitive(IntVector v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

inline IntVector clear_denominators(const std::vector<BigRational>& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, BigInt(x.get_den()));
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(BigInt(x * l));
  return out;
}

namespace detail {

// Pairwise Gauss-style size reduction; crude but deterministic lattice reduction.
inline std::vector<IntVector> reduce_basis(std::vector<IntVector> basis) {
  bool changed = true;
  for (int round = 0; changed && round < 50; ++round) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      for (size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          IntVector cand(basis[i].size());
          for (size_t k = 0; k < cand.size(); ++k) cand[k] = basis[i][k] + sign * basis[j][k];
          cand = normalize_primitive(cand);
          if (max_abs(cand) != 0 && max_abs(cand) < max_abs(basis[i])) {
            basis[i] = cand;
            changed = true;
          }
        }
      }
    }
  }
  return basis;
}

}  // namespace detail

/// Integer basis of the right nullspace of an exact rational matrix, via
/// fraction-free elimination on the denominator-cleared rows. Basis vectors are
/// primitive with positive first nonzero entry, reduced and sorted by max |entry|.
inline std::vector<IntVector> nullspace(const RationalMatrix& matrix, size_t cols) {
  std::vector<IntVector> rows;
  rows.reserve(matrix.size());
  for (const auto& r : matrix) {
    IntVector ir = clear_denominators(r);
    if (max_abs(ir) != 0) rows.push_back(normalize_primitive(ir));
  }

  std::vector<size_t> pivot_cols;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t best = rows.size();
    for (size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const IntVector& piv = rows[rank];
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      BigInt g = gcd(piv[c], rows[r][c]);
      BigInt fp = piv[c] / g, fr = rows[r][c] / g;
      for (size_t k = 0; k < cols; ++k) rows[r][k] = fp * rows[r][k] - fr * piv[k];
      if (max_abs(rows[r]) != 0) rows[r] = normalize_primitive(rows[r]);
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> v(cols, BigRational(0));
    v[f] = 1;
    for (size_t i = 0; i < rank; ++i) {
      size_t pc = pivot_cols[i];
      v[pc] = -BigRational(rows[i][f]) / BigRational(rows[i][pc]);
    }
    basis.push_back(normalize_primitive(clear_denominators(v)));
  }
  if (basis.size() > 1) basis = detail::reduce_basis(std::move(basis));
  std::stable_sort(basis.begin(), basis.end(),
                   [](const IntVector& a, const IntVector& b) { return max_abs(a) < max_abs(b); });
  return basis;
}

}  // namespace holopi
