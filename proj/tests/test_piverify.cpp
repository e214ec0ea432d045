#include <gtest/gtest.h>

#include "holopi/catalog/verify.hpp"
#include "test_support.hpp"

using namespace holopi;
using holopi::testing::catalog;

namespace {

PiSeriesSpec series_of(const std::string& id) {
  const IdentityEntry& e = catalog().identity(id);
  PiSeriesSpec s = catalog().parse_pi(e.kind == "pi" ? e.data.at("series") : e.data.at("lhs"), id, e.tag);
  if (e.data.contains("target")) s.target = Catalog::parse_quadratic(e.data["target"]);
  return s;
}

PiSeriesSpec rhs_of(const std::string& id) { return catalog().parse_pi(catalog().identity(id).data.at("rhs"), id + "-rhs", ""); }

HPReal over_pi(const QuadraticNumber& r, long digits) {
  const long bits = digits_to_bits(digits + 20);
  return quadratic_to_hp(r, bits) / pi_oracle(digits + 20).with_precision(bits);
}

bool divergent(const std::string& id, long digits) {
  try {
    evaluate_sum(series_of(id), digits);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::DivergenceDetected;
  }
  return false;
}

}  // namespace

TEST(EvaluatePiSeries, ClassicalValues) {
  HPReal r28 = evaluate_pi_series(series_of("r28"), 50).value;
  EXPECT_GE(agreed_digits(r28, over_pi(make_rational(2, 3), 50), 50), 50);
  HPReal rr1 = evaluate_pi_series(series_of("rr1"), 50).value;
  EXPECT_GE(agreed_digits(rr1, over_pi(QuadraticNumber(0, make_rational(1, 2), BigInt(3)), 50), 50), 50);
}

TEST(EvaluatePiSeries, BinarySplittingMatchesPlainSummation) {
  PiEvaluation ev = evaluate_sum(series_of("r28"), 100);
  EXPECT_EQ(ev.method, "binary-splitting");
  BigRational sum = 0;
  for (long n = 0; n < 200; ++n) {
    BigInt c = binomial(2 * n, n);
    sum += BigRational(c * c * c) * (BigRational(n) + make_rational(1, 6)) / rational_pow(256, n);
  }
  EXPECT_GE(agreed_digits(ev.value, HPReal(sum, ev.value.precision_bits()), 100), 100);
}

TEST(EvaluatePiSeries, DivergentTableRow) {
  EXPECT_TRUE(divergent("table1-N1-plus", 50));
}

TEST(CheckPiIdentity, SixtyDigitExamples) {
  for (const char* id : {"y10-rhs", "level2-784", "table1-N3-plus"}) {
    CheckReport c = check_pi_identity(series_of(id), 60);
    EXPECT_TRUE(c.pass) << id << ": " << c.detail;
    EXPECT_GE(c.agreedDigits, 60) << id;
  }
}

TEST(CheckPiIdentity, LevelTwentyFourFormulaAgainstSqrtTarget) {
  PiSeriesSpec s = level24_pi_spec(catalog().sequence("t24"), 3, make_rational(1, 12), make_rational(1, 4));
  s.target = QuadraticNumber::sqrt_of(2);  // (1/2) sqrt(24/3) = sqrt(2), identical to sqrt(6/3)
  EXPECT_TRUE(check_pi_identity(s, 60).pass);
}

TEST(CheckNumericEquality, LevelTenTranslation) {
  CheckReport c = check_numeric_equality(series_of("eq520"), rhs_of("eq520"), 40);
  EXPECT_TRUE(c.pass) << c.detail;
  HPReal v = evaluate_pi_series(rhs_of("eq520"), 40).value;
  EXPECT_EQ(v.to_string(37), "855.6378577400352301025732106258961077");
}

TEST(CheckNumericEquality, AsPrintedArgumentsDisagree) {
  EXPECT_FALSE(check_numeric_equality(series_of("eq520-as-printed"), rhs_of("eq520-as-printed"), 40).pass);
}

TEST(CheckNumericEquality, ClosingIdentity) {
  CheckReport c = check_pi_identity(series_of("closing-identity"), 40);
  EXPECT_TRUE(c.pass) << c.detail;
}

TEST(CheckNumericEquality, SpecAgainstItself) {
  for (long d : {15L, 60L}) EXPECT_TRUE(check_numeric_equality(series_of("rr2"), series_of("rr2"), d).pass);
}

TEST(CheckPiIdentity, EveryConvergentCatalogSeriesAt100Digits) {
  for (const auto& e : catalog().identities()) {
    if (e.kind != "pi" || e.expect != "holds" || !e.data.contains("target")) continue;
    CheckReport c = check_pi_identity(series_of(e.id), 100);
    EXPECT_TRUE(c.pass) << e.id << ": " << c.detail;
    EXPECT_GE(c.agreedDigits, 100) << e.id;
  }
}

TEST(CheckPiIdentity, AgreementGrowsWithPrecision) {
  for (const char* id : {"r29", "rr3", "level2-396", "table1-N13-minus", "y10-lhs"}) {
    long a50 = check_pi_identity(series_of(id), 50).agreedDigits, a100 = check_pi_identity(series_of(id), 100).agreedDigits;
    EXPECT_GE(a100, a50) << id;
  }
}

TEST(Divergence, FlagsExactlyTheDivergentEntries) {
  for (const auto& e : catalog().identities()) {
    if (e.kind != "pi" && e.kind != "numeric") continue;
    EXPECT_EQ(divergent(e.id, 30), e.expect == "divergent") << e.id;
  }
}

TEST(CheckPiIdentity, MissingTarget) {
  EXPECT_THROW(check_pi_identity(series_of("eq520-rhs-digits"), 30), Error);
}
