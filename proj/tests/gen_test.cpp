#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "tspan/basic.hpp"
#include "tspan/dismount.hpp"
#include "tspan/gen.hpp"

namespace tspan {
namespace {

using testing::E;

void expect_permutation(const SimpleClique& c) {
  std::vector<Label> labels = c.labels();
  std::sort(labels.begin(), labels.end());
  std::vector<Label> expected(labels.size());
  std::iota(expected.begin(), expected.end(), Label{0});
  EXPECT_EQ(labels, expected);
}

TEST(Rng, BelowStaysInRangeAndIsDeterministic) {
  Rng a(5), b(5);
  for (std::uint64_t bound : {1u, 2u, 3u, 7u, 1000u}) {
    for (int i = 0; i < 200; ++i) {
      const auto x = a.below(bound);
      EXPECT_LT(x, bound);
      EXPECT_EQ(x, b.below(bound));
    }
  }
}

TEST(RandomClique, TwoVertices) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(random_clique(2, seed).labels(), (std::vector<Label>{0}));
  }
}

TEST(RandomClique, LabelsArePermutations) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) expect_permutation(random_clique(2 + seed % 15, seed));
}

TEST(RandomClique, DeterministicPerSeedAndSeedsDiffer) {
  EXPECT_EQ(random_clique(16, 42), random_clique(16, 42));
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_NE(random_clique(16, 2 * s).labels(), random_clique(16, 2 * s + 1).labels());
  }
}

TEST(RandomClique, EveryLabellingOfATriangleAppears) {
  std::set<std::vector<Label>> seen;
  for (std::uint64_t seed = 0; seed < 300; ++seed) seen.insert(random_clique(3, seed).labels());
  EXPECT_EQ(seen.size(), 6u);
}

TEST(RandomClique, TooSmall) {
  try {
    random_clique(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNTooSmall);
  }
}

TEST(RandomMultiClique, SetSizesAndRange) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const MultiLabelClique m = random_multi_clique(8, 3, 20, seed);
    for (Edge e : m.edges()) {
      const auto& ls = m.labels(e);
      EXPECT_GE(ls.size(), 1u);
      EXPECT_LE(ls.size(), 3u);
      for (Label l : ls) {
        EXPECT_GE(l, 0);
        EXPECT_LT(l, 20);
      }
    }
  }
}

TEST(NonPivotable, SixVertexLayout) {
  const SimpleClique c = gen_non_pivotable(6);
  expect_permutation(c);
  EXPECT_EQ(c.label(E("ab")), 0);
  EXPECT_EQ(c.label(E("bc")), 1);
  // Subclique on {a,d,e,f} in lexicographic order: ad ae af de df ef.
  EXPECT_EQ(c.label(E("ad")), 2);
  EXPECT_EQ(c.label(E("ef")), 7);
  EXPECT_EQ(c.label(E("bd")), 8);
  EXPECT_EQ(c.label(E("bf")), 10);
  EXPECT_EQ(c.label(E("ac")), 11);
  EXPECT_EQ(c.label(E("cd")), 12);
  EXPECT_EQ(c.label(E("cf")), 14);
}

TEST(NonPivotable, NoPivotAndTwoPhaseProperty) {
  for (std::size_t n : {6u, 7u, 8u, 10u, 12u}) {
    const SimpleClique c = gen_non_pivotable(n);
    expect_permutation(c);
    EXPECT_FALSE(find_pivot(c).has_value()) << "n=" << n;
    const Label t = static_cast<Label>((n - 2) * (n - 3) / 2 + 1);
    const auto edges = c.edges();
    for (Vertex p = 0; p < n; ++p) {
      const auto dep = latest_departures(c, p, Mode::kStrict, edges, t);
      const bool all_reach_p = std::none_of(dep.begin(), dep.end(), [](Label x) { return x == kNegInf; });
      EXPECT_FALSE(all_reach_p) << "n=" << n << " p=" << p;
      const auto arr = earliest_arrivals(c, p, Mode::kStrict, edges, t + 1);
      const bool p_reaches_all = std::none_of(arr.begin(), arr.end(), [](Label x) { return x == kPosInf; });
      EXPECT_FALSE(p_reaches_all) << "n=" << n << " p=" << p;
    }
  }
}

TEST(NonPivotable, TooSmall) {
  try {
    gen_non_pivotable(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNTooSmall);
  }
}

TEST(NonDismountable, GadgetLabels) {
  const SimpleClique one = gen_non_dismountable(1);
  expect_permutation(one);
  EXPECT_EQ(one.label(E("ab")), 0);
  EXPECT_EQ(one.label(E("bd")), 1);
  EXPECT_EQ(one.label(E("ac")), 2);
  EXPECT_EQ(one.label(E("bc")), 3);
  EXPECT_EQ(one.label(E("ad")), 4);
  EXPECT_EQ(one.label(E("cd")), 5);

  const SimpleClique two = gen_non_dismountable(2);
  expect_permutation(two);
  std::vector<Label> copy0, copy1;
  for (Vertex x = 0; x < 4; ++x) {
    for (Vertex y = x + 1; y < 4; ++y) {
      copy0.push_back(two.label(x, y));
      copy1.push_back(two.label(x + 4, y + 4));
    }
  }
  std::sort(copy0.begin(), copy0.end());
  std::sort(copy1.begin(), copy1.end());
  EXPECT_EQ(copy0, (std::vector<Label>{0, 1, 2, 22, 23, 24}));
  EXPECT_EQ(copy1, (std::vector<Label>{3, 4, 5, 25, 26, 27}));
}

TEST(NonDismountable, ExtremeEdgesFormPathsInsideEachCopy) {
  for (std::size_t m : {1u, 2u, 3u, 5u}) {
    const SimpleClique c = gen_non_dismountable(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (Side side : {Side::kMin, Side::kMax}) {
        std::set<Edge> ext;
        std::vector<int> degree(4, 0);
        for (Vertex v = 4 * i; v < 4 * i + 4; ++v) ext.insert(c.extreme_edge(v, side));
        ASSERT_EQ(ext.size(), 3u);
        for (Edge e : ext) {
          ASSERT_GE(e.u, 4 * i);
          ASSERT_LT(e.v, 4 * i + 4);
          ++degree[e.u - 4 * i];
          ++degree[e.v - 4 * i];
        }
        std::sort(degree.begin(), degree.end());
        EXPECT_EQ(degree, (std::vector<int>{1, 1, 2, 2}));
      }
    }
  }
}

TEST(NonDismountable, NotDismountableForAnyK) {
  for (std::size_t m : {1u, 2u, 3u}) {
    const SimpleClique c = gen_non_dismountable(m);
    for (std::size_t k = 1; k <= c.n(); ++k) EXPECT_FALSE(find_dismountable(c, k).has_value());
  }
}

TEST(Fixtures, NamesAndLabels) {
  for (const auto& name : fixture_names()) EXPECT_NO_THROW(fixture(name));
  EXPECT_EQ(fixture("fix8").label(E("ab")), 26);
  EXPECT_EQ(fixture("fix8").label(E("gh")), 16);
  EXPECT_EQ(fixture("fixnd4").label(E("bd")), 0);
  EXPECT_EQ(fixture("fixnd4").label(E("ac")), 5);
  EXPECT_EQ(fixture("fixd5").label(E("ae")), 9);
  EXPECT_EQ(fixture("fixnp5").label(E("ce")), 9);
  try {
    fixture("fix9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownFixture);
  }
}

TEST(RandomResidual, IsLegal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BipartiteResidual r = random_residual(4 + seed, seed);
    for (std::size_t e = 0; e < r.k(); ++e) {
      EXPECT_EQ(r.rank(e, r.s_minus(e)), 1u);
      EXPECT_EQ(r.rank(e, r.s_plus(e)), r.k());
    }
  }
}

}  // namespace
}  // namespace tspan
