#pragma once

#include <random>

#include "holopi/catalog/catalog.hpp"
#include "holopi/catalog_data.hpp"

namespace holopi {

inline void PrintTo(const TruncatedSeries& s, std::ostream* os) { *os << s.to_string(12); }
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace holopi

namespace holopi::testing {

inline const Catalog& catalog() {
  static const Catalog c = Catalog::from_string(kEmbeddedCatalog);
  return c;
}

inline BigRational random_rational(std::mt19937_64& rng, long span = 50) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return make_rational(num(rng), den(rng));
}

inline TruncatedSeries random_series(std::mt19937_64& rng, long order, long span = 9) {
  TruncatedSeries s(order);
  for (long i = 0; i <= order; ++i) s.at(i) = random_rational(rng, span);
  return s;
}

inline const SequenceDef& catalog_sequence(const std::string& id) { return *catalog().sequence(id); }

inline TruncatedSeries sequence_terms_series(const SequenceDef& s, long order) {
  auto t = s.terms(order);
  return TruncatedSeries(std::vector<BigRational>(t.begin(), t.end()), order);
}

inline std::vector<BigRational> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

}  // namespace holopi::testing
