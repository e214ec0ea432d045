#include <gtest/gtest.h>

#include "holopi/catalog/verify.hpp"
#include "test_support.hpp"

using namespace holopi;
using holopi::testing::catalog;
using holopi::testing::ints;

namespace {

struct Row {
  long N;
  int sign;
  const char* x;
  const char* lambda;
};

// Convergent rows of the level 24 table; N=17, q>0 carries the value that satisfies the series.
const Row kRows[] = {{3, 1, "1/12", "1/4"},     {3, -1, "-1/8", "1/2"},     {5, 1, "1/20", "1/4"},
                     {5, -1, "-1/16", "2/5"},   {7, 1, "1/32", "5/21"},     {7, -1, "-1/28", "1/3"},
                     {13, 1, "1/104", "1/5"},   {13, -1, "-1/100", "3/13"}, {17, 1, "1/200", "43/238"},
                     {17, -1, "-1/196", "67/340"}};

std::shared_ptr<const SequenceDef> t24() { return catalog().sequence("t24"); }

HPReal x_at(long N, int sign, long digits) { return evaluate_modular_at_q("x24", table_q(N, sign, digits), digits); }

}  // namespace

TEST(EtaQuotient, Expansions) {
  EXPECT_EQ(eta_quotient_expand({{2, 1}, {4, 1}, {6, 1}, {12, 1}}, 7), TruncatedSeries(ints({0, 1, 0, -1, 0, -2, 0, 0}), 7));
  EXPECT_EQ(euler_product(1, 7), TruncatedSeries(ints({1, -1, -1, 0, 0, 1, 0, 1}), 7));
  try {
    eta_quotient_expand({{1, 1}}, 5);
    FAIL() << "expected FractionalOffset";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FractionalOffset);
  }
}

TEST(EtaQuotient, PentagonalNumberTheorem) {
  const long order = 200;
  TruncatedSeries expected(order);
  for (long k = -20; k <= 20; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e <= order) expected.at(e) = (k % 2 == 0) ? 1 : -1;
  }
  EXPECT_EQ(euler_product(1, order), expected);
}

TEST(Eisenstein, Expansions) {
  EXPECT_EQ(eisenstein_P(1, 3), TruncatedSeries(ints({1, -24, -72, -96}), 3));
  EXPECT_EQ(eisenstein_P(2, 3), TruncatedSeries(ints({1, 0, -24, 0}), 3));
  EXPECT_EQ(eisenstein_P(1, 0), TruncatedSeries::constant(1, 0));
}

TEST(QIdentities, AllFiveAtOrder25) {
  QSequences seqs = detail::q_sequences(catalog());
  for (const char* id : {"th", "th2", "x-symmetry", "par", "par1"}) {
    QCheck q = verify_q_identity_detail(id, 25, seqs);
    EXPECT_TRUE(q.pass) << id;
    EXPECT_FALSE(q.parts.empty()) << id;
  }
  EXPECT_THROW(verify_q_identity("nope", 10, seqs), Error);
}

TEST(QIdentities, OddPartOfReciprocal) {
  Level24 f = level24_forms(30);
  QSeries x = f.x;
  EXPECT_EQ(x[0], 0);
  EXPECT_EQ(x[1], 1);
  EXPECT_EQ(negate_q(negate_q(x)), x);
}

TEST(ModularValues, TableRows) {
  for (const Row& r : kRows) {
    HPReal x = x_at(r.N, r.sign, 30);
    EXPECT_GE(agreed_digits(x, HPReal(parse_rational(r.x), x.precision_bits()), 30), 30) << r.N << " " << r.sign;
  }
}

TEST(ModularValues, QuadraticRow) {
  HPReal x = x_at(11, 1, 40);
  QuadraticNumber x11 = QuadraticNumber(1) / QuadraticNumber(38, 6, BigInt(33));
  EXPECT_GE(agreed_digits(x, quadratic_to_hp(x11, x.precision_bits()), 40), 40);
}

TEST(ModularValues, StableUnderExtraDigits) {
  for (long N : {3L, 7L, 13L}) {
    HPReal a = x_at(N, 1, 30), b = x_at(N, 1, 40).with_precision(a.precision_bits());
    EXPECT_GE(agreed_digits(a, b, 30), 30) << N;
  }
}

TEST(ModularValues, OutOfRange) {
  try {
    evaluate_modular_at_q("x24", HPReal(1, 64), 20);
    FAIL() << "expected QOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QOutOfRange);
  }
}

TEST(RecoverLambda, SpecExamples) {
  EXPECT_EQ(recover_lambda(t24(), 5, 1, 40).lambda, QuadraticNumber(make_rational(1, 4)));
  EXPECT_EQ(recover_lambda(t24(), 13, 1, 40).lambda, QuadraticNumber(make_rational(1, 5)));
  EXPECT_EQ(recover_lambda(t24(), 17, -1, 40).lambda, QuadraticNumber(make_rational(67, 340)));
}

TEST(RecoverLambda, AllConvergentRows) {
  for (const Row& r : kRows) {
    LambdaResult res = recover_lambda(t24(), r.N, r.sign, 40);
    EXPECT_EQ(res.x, QuadraticNumber(parse_rational(r.x))) << r.N << " " << r.sign;
    EXPECT_EQ(res.lambda, QuadraticNumber(parse_rational(r.lambda))) << r.N << " " << r.sign;
    EXPECT_GE(res.verifiedDigits, 40);
  }
}

TEST(RecoverLambda, PrintedSeventeenValueDoesNotSatisfySeries) {
  CheckReport c = check_pi_identity(level24_pi_spec(t24(), 17, make_rational(1, 200), make_rational(143, 238)), 30);
  EXPECT_FALSE(c.pass);
  EXPECT_NE(recover_lambda(t24(), 17, 1, 30).lambda, QuadraticNumber(make_rational(143, 238)));
}

TEST(RecoverLambda, QuadraticRow) {
  LambdaResult res = recover_lambda(t24(), 11, 1, 40);
  EXPECT_EQ(res.x, QuadraticNumber(1) / QuadraticNumber(38, 6, BigInt(33)));
  EXPECT_EQ(res.lambda, QuadraticNumber(58) / QuadraticNumber(165, 19, BigInt(33)));
}

TEST(RecoverLambda, CatalogRecordsFootnote) {
  EXPECT_EQ(catalog().identity("note-level10-footnote").kind, "note");
  EXPECT_NE(catalog().identity("note-level10-footnote").data.at("text").get<std::string>().find("1/196"), std::string::npos);
}
