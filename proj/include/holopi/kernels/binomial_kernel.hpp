#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "holopi/numerics/rational.hpp"

namespace holopi {

/// a_n n + a_k k + a_j j + c over the summation indices.
struct Affine {
  long n = 0, k = 0, j = 0, c = 0;
  long operator()(long nv, long kv, long jv = 0) const { return n * nv + k * kv + j * jv + c; }
};

/// C(m, j) memoized per thread; rows of a double sum reuse the same few thousand values.
inline const BigInt& cached_binomial(long m, long j) {
  thread_local std::unordered_map<std::uint64_t, BigInt> cache;
  thread_local BigInt zero = 0;
  if (j < 0 || j > m) {
    if (m < 0 && j >= 0) binomial(m, j);
    return zero;
  }
  if (m > 0x7fffffffL) fail(ErrorKind::InvalidArgument, "binomial top too large");
  if (cache.size() > 400000) cache.clear();
  std::uint64_t key = (static_cast<std::uint64_t>(m) << 32) | static_cast<std::uint64_t>(j);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, binomial(m, j)).first;
  return it->second;
}

/// ceil or floor of (a n + b k + c) with rational slopes; bounds of the support.
struct Bound {
  BigRational n = 0, k = 0, c = 0;
  long lower(long nv, long kv = 0) const { return ceil_div(n * nv + k * kv + c); }
  long upper(long nv, long kv = 0) const { return floor_div(n * nv + k * kv + c); }
};

/// Product of binomials, a rational scalar and rational geometric factors in the
/// indices (n, k) and optionally a second inner index j. Outside the declared
/// support the value is 0 without evaluating any binomial.
struct BinomialKernel {
  struct Binom {
    Affine top, bottom;
    long power = 1;
  };
  struct Geometric {
    BigRational base;
    Affine exponent;
  };
  std::string id;
  std::vector<Binom> factors;
  BigRational scalar = 1;
  std::vector<Geometric> geometric;
  Bound kMin{0, 0, 0}, kMax{1, 0, 0};
  bool hasJ = false;
  Bound jMin{0, 0, 0}, jMax{0, 0, 0};

  bool in_support(long n, long k, long j = 0) const {
    if (n < 0 || k < kMin.lower(n) || k > kMax.upper(n)) return false;
    if (hasJ) return j >= jMin.lower(n, k) && j <= jMax.upper(n, k);
    return j == 0;
  }

  /// Single term at (n, k, j).
  BigRational term(long n, long k, long j = 0) const {
    if (!in_support(n, k, j)) return 0;
    BigInt prod = 1;
    for (const auto& f : factors) {
      const BigInt& b = cached_binomial(f.top(n, k, j), f.bottom(n, k, j));
      if (b == 0) return 0;
      for (long p = 0; p < f.power; ++p) prod *= b;
    }
    if (scalar == 1 && geometric.empty()) return BigRational(prod);
    BigRational v = scalar * BigRational(prod);
    for (const auto& g : geometric) v *= rational_pow(g.base, g.exponent(n, k, j));
    return v;
  }

  /// h(n, k): the term itself, or its sum over the second index.
  BigRational eval(long n, long k) const {
    if (!hasJ) return term(n, k);
    if (n < 0 || k < kMin.lower(n) || k > kMax.upper(n)) return 0;
    BigRational s = 0;
    for (long j = jMin.lower(n, k); j <= jMax.upper(n, k); ++j) s += term(n, k, j);
    return s;
  }

  /// sum_k h(n, k) y^k over the support.
  BigRational inner_sum(long n, const BigRational& y = 1) const {
    const long k0 = std::max(0L, kMin.lower(n)), k1 = kMax.upper(n);
    if (k1 < k0) return 0;
    std::vector<BigRational> h;
    h.reserve(static_cast<size_t>(k1 - k0 + 1));
    bool integral = true;
    for (long k = k0; k <= k1; ++k) {
      h.push_back(eval(n, k));
      integral = integral && h.back().get_den() == 1;
    }
    if (!integral) {
      BigRational s = 0, yp = rational_pow(y, k0);
      for (const auto& v : h) {
        s += v * yp;
        yp *= y;
      }
      return s;
    }
    // Horner over integers: sum_k h_k p^{k-k0} q^{k1-k}, one division at the end
    const BigInt& p = y.get_num();
    const BigInt& q = y.get_den();
    BigInt acc = h.back().get_num(), qp = 1;
    for (long i = static_cast<long>(h.size()) - 2; i >= 0; --i) {
      qp *= q;
      acc = acc * p + h[static_cast<size_t>(i)].get_num() * qp;
    }
    BigInt den = qp, num = acc;
    BigRational yk = rational_pow(y, k0);
    return make_rational(num, den) * yk;
  }
};

inline BigRational kernel_eval(const BinomialKernel& kernel, long n, long k) { return kernel.eval(n, k); }

}  // namespace holopi
