#include <gtest/gtest.h>

#include "holopi/satellite/satellite.hpp"
#include "test_support.hpp"

using namespace holopi;
using holopi::testing::catalog;

namespace {

SatelliteTriple triple(Polynomial P, Polynomial Q, Polynomial R) { return {std::move(P), std::move(Q), std::move(R), ""}; }

const SatelliteTriple kH10 = triple({0, 4}, {3, 12}, {-2, 2});
const SatelliteTriple kLevel24 = triple({0, 2}, {2, 2}, {-1, 2});

SatelliteTriple scaled(const SatelliteTriple& t, long s) {
  return triple(BigRational(s) * t.P, BigRational(s) * t.Q, BigRational(s) * t.R);
}

}  // namespace

TEST(DiscoverExact, RecoversBothKnownSatellites) {
  auto h = discover_exact(*catalog().kernel("h10"), 1, 30);
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->same_up_to_scaling(kH10)) << h->to_string();
  auto g = discover_exact(*catalog().kernel("level24"), 1, 30);
  ASSERT_TRUE(g);
  EXPECT_TRUE(g->same_up_to_scaling(kLevel24)) << g->to_string();
  EXPECT_EQ(g->normalized().P, Polynomial({0, 2}));
}

TEST(DiscoverExact, NoConstantCoefficientSatellite) {
  EXPECT_FALSE(discover_exact(*catalog().kernel("h10"), 0, 30));
}

TEST(DiscoverExact, OutputVerifiesAtDoubleTruncation) {
  for (const char* id : {"h10", "level24", "lvl4", "lvl6b"}) {
    const BinomialKernel& k = *catalog().kernel(id);
    auto t = discover_exact(k, 1, 25);
    if (!t) continue;
    EXPECT_TRUE(verify_satellite(k, *t, 50)) << id;
  }
}

TEST(VerifySatellite, KnownAndTrivialTriples) {
  EXPECT_TRUE(verify_satellite(*catalog().kernel("h10"), kH10, 60));
  EXPECT_TRUE(verify_satellite(*catalog().kernel("level24"), kLevel24, 60));
  EXPECT_FALSE(verify_satellite(*catalog().kernel("h10"), triple({1}, {}, {}), 60));
}

TEST(VerifySatellite, ScalingInvariance) {
  for (long s : {-3L, 2L, 7L}) {
    EXPECT_TRUE(verify_satellite(*catalog().kernel("h10"), scaled(kH10, s), 40));
    EXPECT_FALSE(verify_satellite(*catalog().kernel("h10"), scaled(triple({1}, {}, {}), s), 40));
  }
}

TEST(DiscoverPslq, MatchesExactMode) {
  for (const char* id : {"h10", "level24"}) {
    const BinomialKernel& k = *catalog().kernel(id);
    auto p = discover_pslq(k, 1, 120, make_rational(1, 100));
    auto e = discover_exact(k, 1, 30);
    ASSERT_TRUE(p) << id;
    ASSERT_TRUE(e) << id;
    EXPECT_TRUE(p->same_up_to_scaling(*e)) << id << ": " << p->to_string();
  }
}

TEST(DiscoverPslq, DivergentSamplePoint) {
  try {
    discover_pslq(*catalog().kernel("h10"), 1, 120, make_rational(1, 2));
    FAIL() << "expected DivergentSample";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivergentSample);
  }
}

TEST(DiscoverPslq, PrecisionBelowThreshold) {
  try {
    discover_pslq(*catalog().kernel("h10"), 1, 10, make_rational(1, 100));
    FAIL() << "expected NoRelationFound";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoRelationFound);
  }
}
