#include <gtest/gtest.h>

#include "holopi/holonomic/guess.hpp"
#include "test_support.hpp"

using namespace holopi;
using holopi::testing::catalog;
using holopi::testing::catalog_sequence;
using holopi::testing::sequence_terms_series;

namespace {

TruncatedSeries solution_series(const OdeEntry& o, long order) {
  return expand_sum(*o.solution, order + o.ode->order() + o.ode->max_degree()).plain;
}

}  // namespace

TEST(OdeToRecurrence, MonomialSolution) {
  // x y' - y = 0
  LODE ode({Polynomial({-1}), Polynomial({0, 1})});
  PRecurrence r = ode_to_recurrence(ode);
  ASSERT_EQ(r.order(), 0);
  EXPECT_TRUE(r.proportional_to(PRecurrence{{Polynomial({-1, 1})}, {}}));
}

TEST(OdeToRecurrence, Level24FourTermRecurrence) {
  PRecurrence r = ode_to_recurrence(*catalog().ode("de24").ode, true);
  EXPECT_TRUE(r.proportional_to(*catalog_sequence("t24").recurrence()));
}

TEST(OdeToRecurrence, Level6Recurrence) {
  PRecurrence r = ode_to_recurrence(*catalog().ode("par-ode").ode, true);
  EXPECT_TRUE(r.proportional_to(*catalog_sequence("t6").recurrence()));
}

TEST(OdeToRecurrence, RoundTripReproducesClosedForm) {
  PRecurrence r = ode_to_recurrence(*catalog().ode("de24").ode, true);
  r.initial = catalog_sequence("t24").recurrence()->initial;
  auto t = r.terms(60);
  for (long n = 0; n <= 60; ++n) EXPECT_EQ(t[n], seq_eval_closed(catalog_sequence("t24"), n)) << n;
}

TEST(ApplyOde, CatalogSolutionsAreAnnihilated) {
  for (const char* id : {"DE", "de24", "par-ode", "chan-ode-corrected"}) {
    const OdeEntry& o = catalog().ode(id);
    TruncatedSeries res = apply_ode(*o.ode, solution_series(o, 40));
    EXPECT_GE(res.order(), 40) << id;
    EXPECT_TRUE(res.is_zero()) << id;
  }
}

TEST(ApplyOde, MisprintedCoefficientLeavesResidual) {
  const OdeEntry& o = catalog().ode("chan-ode");
  EXPECT_FALSE(apply_ode(*o.ode, solution_series(o, 40)).is_zero());
}

TEST(ApplyOde, PerturbationIsDetected) {
  const OdeEntry& o = catalog().ode("de24");
  TruncatedSeries s = sequence_terms_series(catalog_sequence("t24"), 45);
  s.at(5) += 1;
  EXPECT_FALSE(apply_ode(*o.ode, s).is_zero());
}

TEST(Guess, DombThreeTermRecurrence) {
  auto r = guess_recurrence(catalog_sequence("domb").terms(24), 2, 3);
  ASSERT_TRUE(r);
  // (n+1)^3 u(n+1) = (2n+1)(10n^2+10n+4) u(n) - 64 n^3 u(n-1), shifted to index n
  PRecurrence expected{{Polynomial({0, 0, 0, 1}), -(Polynomial({-1, 2}) * Polynomial({4, -10, 10})),
                        64 * Polynomial({-1, 1}).pow(3)},
                       {}};
  EXPECT_TRUE(r->proportional_to(expected)) << r->to_string();
}

TEST(Guess, ConstantSequence) {
  auto r = guess_recurrence(std::vector<BigRational>(15, BigRational(1)), 1, 0);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->proportional_to(PRecurrence{{Polynomial({1}), Polynomial({-1})}, {}}));
}

TEST(Guess, Level14FromSeriesCoefficients) {
  const IdentityEntry& e1 = catalog().identity("e1");
  SumSpec lhs = catalog().parse_sum(e1.data.at("lhs").at("sum"));
  TruncatedSeries a = expand_sum(lhs, 29).plain;
  std::vector<BigRational> terms;
  for (long n = 0; n <= 29; ++n) terms.push_back(a[n]);
  auto r = guess_recurrence(terms, 3, 3);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->proportional_to(*catalog_sequence("a14").recurrence())) << r->to_string();
}

TEST(Guess, GuessedRecurrenceAnnihilatesFreshTerms) {
  for (const char* id : {"s4", "t24", "a14", "v"}) {
    const SequenceDef& s = catalog_sequence(id);
    auto r = guess_recurrence(s.terms(40), 3, 4);
    ASSERT_TRUE(r) << id;
    auto fresh = s.terms(120);
    for (long n = r->order(); n <= 120; ++n) EXPECT_EQ(r->residual(fresh, n), 0) << id << " n=" << n;
  }
}

TEST(Guess, TooFewTerms) {
  EXPECT_THROW(guess_recurrence(catalog_sequence("s4").terms(5), 3, 3), Error);
}
