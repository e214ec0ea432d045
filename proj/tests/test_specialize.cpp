#include <gtest/gtest.h>

#include "holopi/catalog/verify.hpp"
#include "test_support.hpp"

using namespace holopi;
using holopi::testing::catalog;
using holopi::testing::ints;
using holopi::testing::random_rational;

namespace {

SumSpec lhs_sum(const std::string& id) { return catalog().parse_sum(catalog().identity(id).data.at("lhs").at("sum")); }

bool holds(const std::string& id, long order) {
  return verify_identity(catalog(), catalog().identity(id), {order, 0}).pass;
}

TruncatedSeries central_cubes_even(long order) {
  TruncatedSeries s(order);
  for (long n = 0; 2 * n <= order; ++n) {
    BigInt c = binomial(2 * n, n);
    s.at(2 * n) = c * c * c;
  }
  return s;
}

}  // namespace

TEST(ExpandDouble, SmallOrders) {
  EXPECT_EQ(expand_double(lhs_sum("fx"), 2), TruncatedSeries(ints({1, 2, 10}), 2));
  EXPECT_EQ(expand_double(lhs_sum("new"), 3), TruncatedSeries(ints({1, 2, 18, 164}), 3));
  EXPECT_EQ(expand_double(lhs_sum("g-level2"), 4), TruncatedSeries(ints({1, 0, 24, 0, 2520}), 4));
}

TEST(SeriesIdentities, NamedExamples) {
  EXPECT_TRUE(holds("rogers", 40));
  EXPECT_TRUE(holds("fx", 40));
  EXPECT_TRUE(holds("lemma-fDf-derivative", 30));
}

TEST(SeriesIdentities, EveryCatalogSeriesIdentityAtOrder40) {
  for (const auto& e : catalog().identities()) {
    if (e.kind != "series") continue;
    IdentityReport r = verify_identity(catalog(), e, {40, 0});
    EXPECT_TRUE(r.pass) << e.id << ": " << r.detail;
  }
}

TEST(Translations, NamedExamples) {
  EXPECT_TRUE(holds("i10", 30));
  EXPECT_TRUE(holds("55", 30));
  EXPECT_TRUE(holds("interesting", 30));
}

TEST(Translations, AsPrintedOffsetsFail) {
  IdentityReport r = verify_identity(catalog(), catalog().identity("interesting-as-printed"), {30, 0});
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.pass);
}

TEST(Translations, RandomParametersMatchBasis) {
  std::mt19937_64 rng(23);
  for (const char* id : {"i1", "i11", "m1", "herewegoagain", "55", "level2", "i10", "fdf-translation"}) {
    const Json& j = catalog().identity(id).data;
    std::vector<std::string> params = j.at("params").get<std::vector<std::string>>();
    std::vector<std::map<std::string, BigRational>> points;
    for (int i = 0; i < 5; ++i) {
      std::map<std::string, BigRational> p;
      for (const auto& name : params) p[name] = random_rational(rng);
      points.push_back(p);
    }
    SeriesCheck sc = verify_linear_identity(catalog().parse_side(j.at("lhs")), catalog().parse_side(j.at("rhs")), 30, points);
    EXPECT_TRUE(sc.pass) << id << ": " << sc.detail;
  }
}

TEST(SeriesIdentities, ThreeFormulasForLevel14Sequence) {
  TruncatedSeries e1 = expand_double(lhs_sum("e1"), 30), e2 = expand_double(lhs_sum("e2"), 30),
                  dash = expand_double(lhs_sum("dash"), 30);
  EXPECT_EQ(e1, e2);
  EXPECT_EQ(e1, dash);
}

TEST(SeriesIdentities, CentralBinomialCubeChain) {
  TruncatedSeries target = central_cubes_even(40);
  for (const char* id : {"level4-hypergeometric", "level4-plus", "level4-minus"}) EXPECT_EQ(expand_double(lhs_sum(id), 40), target) << id;
}

TEST(SeriesIdentities, Level6ChainAgrees) {
  const Json& d3 = catalog().identity("par-d3").data, &d4 = catalog().identity("par-d4").data;
  TruncatedSeries a = expand_double(catalog().parse_sum(d3.at("rhs").at("sum")), 40);
  TruncatedSeries b = expand_double(catalog().parse_sum(d4.at("rhs").at("sum")), 40);
  TruncatedSeries t6 = expand_double(catalog().parse_sum(d3.at("lhs").at("sum")), 40);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, t6);
  EXPECT_EQ(expand_double(lhs_sum("nice"), 40), t6);
}

TEST(Whipple, PolynomialSides) {
  EXPECT_EQ(whipple_lhs(0), Polynomial({1}));
  EXPECT_EQ(whipple_rhs(0), Polynomial({1}));
  EXPECT_EQ(whipple_lhs(1), Polynomial({4, 4}));
  EXPECT_EQ(whipple_rhs(1), Polynomial({4, 4}));
  EXPECT_TRUE(verify_whipple(15).pass);
}

TEST(Trans1, LaurentSlices) {
  EXPECT_EQ(trans1_lhs(0), LaurentSlice::constant(1));
  EXPECT_EQ(trans1_rhs(0), LaurentSlice::constant(1));
  LaurentSlice m1 = LaurentSlice::monomial(1, 2) + LaurentSlice::monomial(-1, 2);
  EXPECT_EQ(trans1_lhs(1), m1);
  EXPECT_EQ(trans1_rhs(1), m1);
  Trans1Slices s = expand_trans1(12);
  EXPECT_TRUE(s.equal) << s.firstMismatch;
}

TEST(Trans2, NumericAgreement) {
  Trans2Check k0 = verify_trans2_numeric(make_rational(6, 5), 0, 40);
  EXPECT_TRUE(k0.pass);
  Trans2Check t = verify_trans2_numeric(make_rational(6, 5), 6, 40);
  EXPECT_TRUE(t.pass);
  EXPECT_GE(t.minAgreedDigits, 40);
}

TEST(Trans2, DivergentParameterRejected) {
  try {
    verify_trans2_numeric(make_rational(1, 2), 3, 30);
    FAIL() << "expected DivergentParameter";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivergentParameter);
  }
}

TEST(Legendre, LowDegreeValues) {
  EXPECT_EQ(legendre(0, make_rational(6, 5)), 1);
  EXPECT_EQ(legendre(2, make_rational(6, 5)), (3 * make_rational(36, 25) - 1) / 2);
}
