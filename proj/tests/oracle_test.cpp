#include <gtest/gtest.h>

#include <bit>

#include "support.hpp"
#include "tspan/basic.hpp"
#include "tspan/dismount.hpp"
#include "tspan/fireworks.hpp"
#include "tspan/gen.hpp"
#include "tspan/oracle.hpp"
#include "tspan/pipeline.hpp"

namespace tspan {
namespace {

// Plain loop over every mask, with the path-enumeration connectivity check.
std::size_t naive_minimum(const SimpleClique& c) {
  const auto edges = c.edges();
  std::size_t best = edges.size();
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    const auto bits = static_cast<std::size_t>(std::popcount(mask));
    if (bits >= best) continue;
    std::vector<Edge> subset;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask & (1u << i)) subset.push_back(edges[i]);
    }
    if (testing::brute_connected(c, Mode::kStrict, subset)) best = bits;
  }
  return best;
}

TEST(MinSpanner, TwoVertices) {
  const MinSpannerResult r = min_spanner(SimpleClique::from_labels(2, {0}));
  EXPECT_EQ(r.size, 1u);
}

TEST(MinSpanner, FourVerticesNeedFourOrFive) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SimpleClique c = random_clique(4, seed);
    const MinSpannerResult r = min_spanner(c);
    EXPECT_GE(r.size, 4u);
    EXPECT_LE(r.size, 5u);
    EXPECT_EQ(r.size, naive_minimum(c)) << "seed " << seed;
    EXPECT_EQ(r.witness.size(), r.size);
    EXPECT_TRUE(verify_spanner(c, r.witness, Mode::kStrict));
  }
}

TEST(MinSpanner, DismountFixture) {
  const SimpleClique c = fixture("fixd5");
  const MinSpannerResult r = min_spanner(c);
  EXPECT_GE(r.size, 6u);
  EXPECT_LE(r.size, 7u);
  EXPECT_EQ(r.size, naive_minimum(c));
}

TEST(MinSpanner, AgreesWithNaiveSearchOnFiveVertices) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const SimpleClique c = random_clique(5, seed);
    EXPECT_EQ(min_spanner(c).size, naive_minimum(c)) << "seed " << seed;
  }
}

TEST(MinSpanner, FloorAndCeilingOnSixVertices) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const SimpleClique c = random_clique(6, seed);
    const std::size_t m = min_spanner(c).size;
    EXPECT_GE(m, gossip_lower_bound(6));
    EXPECT_LE(m, spanner_nlogn(c).spanner.size());
    EXPECT_LE(m, bidirectional_cover(c).spanner.size());
    EXPECT_LE(m, k4_sparsify(c).size());
    if (const auto d = dismount_fully(c, 1)) EXPECT_LE(m, d->size());
    if (const auto p = find_pivot(c)) EXPECT_LE(m, pivot_spanner(c, *p).size());
  }
}

TEST(MinSpanner, GuardRejectsLargeInstances) {
  for (std::size_t max_n : {5u, 7u}) {
    try {
      min_spanner(random_clique(max_n + 1, 0), max_n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kInstanceTooLarge);
    }
  }
  EXPECT_THROW(min_spanner(random_clique(8, 0), 10), Error);
}

TEST(GossipBound, Values) {
  EXPECT_EQ(gossip_lower_bound(4), 4u);
  EXPECT_EQ(gossip_lower_bound(7), 10u);
  EXPECT_EQ(gossip_lower_bound(3), 2u);
}

}  // namespace
}  // namespace tspan
