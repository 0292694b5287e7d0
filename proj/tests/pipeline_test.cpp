#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "tspan/gen.hpp"
#include "tspan/pipeline.hpp"

namespace tspan {
namespace {

using testing::E;

// Every vertex is an emitter or a collector, yet one matching edge is not
// extreme on its far side. Found by a seeded search over 6-vertex cliques.
const std::vector<Label> kCase2DismountLabels = {7, 8, 13, 2, 14, 10, 4, 0, 3, 5, 6, 12, 1, 11, 9};

void expect_step_shape(const SimpleClique& c, const DismountStep& s) {
  ASSERT_FALSE(s.out_journey.empty());
  ASSERT_FALSE(s.in_journey.empty());
  EXPECT_LE(s.out_journey.hops.size(), 2u);
  EXPECT_LE(s.in_journey.hops.size(), 2u);
  EXPECT_EQ(s.out_journey.source(), s.v);
  EXPECT_EQ(s.in_journey.target(), s.v);
  EXPECT_TRUE(is_journey(c, s.out_journey, Mode::kStrict));
  EXPECT_TRUE(is_journey(c, s.in_journey, Mode::kStrict));
  const Hop last = s.out_journey.hops.back();
  EXPECT_EQ(c.extreme_edge(last.to, Side::kMin), Edge(last.from, last.to));
  const Hop first = s.in_journey.hops.front();
  EXPECT_EQ(c.extreme_edge(first.from, Side::kMax), Edge(first.from, first.to));
}

std::vector<Label> sorted_labels(const SimpleClique& c, const std::set<Edge>& edges) {
  std::vector<Label> out;
  for (Edge e : edges) out.push_back(c.label(e));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ClassifyResidual, EightVertexFixtureIsAResidual) {
  const SimpleClique c = fixture("fix8");
  const auto cls = classify_residual(c, bidirectional_cover(c));
  ASSERT_TRUE(std::holds_alternative<Case2Residual>(cls));
  const BipartiteResidual& r = std::get<Case2Residual>(cls).residual;
  EXPECT_EQ(r.emitters(), (std::vector<Vertex>{0, 5, 6, 7}));
  EXPECT_EQ(r.collectors(), (std::vector<Vertex>{1, 2, 3, 4}));
  std::set<Edge> s_minus, s_plus;
  for (std::size_t e = 0; e < r.k(); ++e) {
    s_minus.insert(r.host_edge(e, r.s_minus(e)));
    s_plus.insert(r.host_edge(e, r.s_plus(e)));
  }
  EXPECT_EQ(s_minus, testing::edges_of("ac df eg bh"));
  EXPECT_EQ(s_plus, testing::edges_of("ab ef dg ch"));
  EXPECT_EQ(sorted_labels(c, s_minus), (std::vector<Label>{1, 2, 4, 6}));
  EXPECT_EQ(sorted_labels(c, s_plus), (std::vector<Label>{21, 24, 25, 26}));
}

TEST(ClassifyResidual, SixVertexFixtureIsCaseOne) {
  const SimpleClique c = fixture("fix6");
  const auto cls = classify_residual(c, bidirectional_cover(c));
  ASSERT_TRUE(std::holds_alternative<Case1>(cls));
  const DismountStep& s = std::get<Case1>(cls).step;
  EXPECT_EQ(s.v, 1u);
  expect_step_shape(c, s);
}

TEST(ClassifyResidual, SwappedEightVertexFixtureFallsIntoCaseOne) {
  std::vector<Label> labels = fixture("fix8").labels();
  std::replace_if(labels.begin(), labels.end(), [](Label l) { return l == 2 || l == 13; }, -1);
  labels[edge_index(8, E("ac"))] = 13;
  labels[edge_index(8, E("ae"))] = 2;
  const SimpleClique c = SimpleClique::from_labels(8, labels);
  const FireworksCover fw = bidirectional_cover(c);
  // Three emitters remain, so c is neither emitter nor collector.
  EXPECT_EQ(fw.emitters.size(), 3u);
  const auto cls = classify_residual(c, fw);
  ASSERT_TRUE(std::holds_alternative<Case1>(cls));
  expect_step_shape(c, std::get<Case1>(cls).step);
}

TEST(ClassifyResidual, CaseTwoDismount) {
  const SimpleClique c = SimpleClique::from_labels(6, kCase2DismountLabels);
  const FireworksCover fw = bidirectional_cover(c);
  EXPECT_EQ(fw.emitters.size() + fw.collectors.size(), 6u);
  const auto cls = classify_residual(c, fw);
  ASSERT_TRUE(std::holds_alternative<Case2Dismount>(cls));
  const DismountStep& s = std::get<Case2Dismount>(cls).step;
  EXPECT_EQ(s.v, 3u);
  expect_step_shape(c, s);
}

TEST(ClassifyResidual, RejectsAForeignCover) {
  const SimpleClique c = fixture("fix8");
  FireworksCover fw = bidirectional_cover(c);
  std::swap(fw.emitters, fw.collectors);
  try {
    classify_residual(c, fw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInconsistentFireworks);
  }
}

TEST(ClassifyResidual, StepsAndResidualInvariantsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const SimpleClique c = random_clique(5 + seed % 20, seed);
    const auto cls = classify_residual(c, bidirectional_cover(c));
    if (const auto* one = std::get_if<Case1>(&cls)) {
      expect_step_shape(c, one->step);
    } else if (const auto* two = std::get_if<Case2Dismount>(&cls)) {
      expect_step_shape(c, two->step);
    } else {
      const BipartiteResidual& r = std::get<Case2Residual>(cls).residual;
      EXPECT_EQ(2 * r.k(), c.n());
      for (std::size_t e = 0; e < r.k(); ++e) {
        EXPECT_EQ(r.rank(e, r.s_minus(e)), 1u);
        EXPECT_EQ(r.rank(e, r.s_plus(e)), r.k());
      }
    }
  }
}

TEST(SpannerNlogn, EightVertexFixtureKeepsTheResidual) {
  const SimpleClique c = fixture("fix8");
  const PipelineResult res = spanner_nlogn(c);
  std::set<Edge> h;
  for (Vertex x : {0u, 5u, 6u, 7u}) {
    for (Vertex y : {1u, 2u, 3u, 4u}) h.insert(Edge(x, y));
  }
  EXPECT_EQ(std::set<Edge>(res.spanner.edges.begin(), res.spanner.edges.end()), h);
  EXPECT_TRUE(verify_spanner(c, res.spanner, Mode::kStrict));
  EXPECT_EQ(res.report.n2, 8u);
  EXPECT_LE(res.spanner.size(), pipeline_bound(res.report));
}

TEST(SpannerNlogn, DismountFixture) {
  const SimpleClique c = fixture("fixd5");
  const PipelineResult res = spanner_nlogn(c);
  EXPECT_TRUE(testing::brute_connected(c, Mode::kStrict, res.spanner.edges));
  EXPECT_LE(res.spanner.size(), 4u * 5 + 6);
}

TEST(SpannerNlogn, SmallCliquesKeepEverything) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const SimpleClique c = random_clique(n, n);
    const PipelineResult res = spanner_nlogn(c);
    EXPECT_EQ(res.spanner.size(), edge_count(n));
    EXPECT_EQ(res.report.base, n);
  }
}

TEST(SpannerNlogn, ValidityBoundsAndBookkeeping) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 5 + seed % 60;
    const SimpleClique c = random_clique(n, seed);
    const PipelineResult res = spanner_nlogn(c);
    const PipelineReport& rep = res.report;
    EXPECT_TRUE(verify_spanner(c, res.spanner, Mode::kStrict)) << "seed " << seed;
    EXPECT_EQ(rep.n, n);
    EXPECT_EQ(rep.n1 + rep.n2 + rep.base, n);
    EXPECT_EQ(rep.n1, rep.case1 + rep.case2_dismount);
    EXPECT_LE(res.spanner.size(), pipeline_bound(rep));
    EXPECT_LE(res.spanner.size(), pipeline_headline_bound(n));
    EXPECT_LE(rep.dismount_edges, 4 * rep.n1);
  }
}

TEST(SpannerNlogn, SmallInstancesAgainstBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SimpleClique c = random_clique(5 + seed % 3, seed);
    EXPECT_TRUE(testing::brute_connected(c, Mode::kStrict, spanner_nlogn(c).spanner.edges));
  }
}

TEST(PipelineBound, Formulae) {
  PipelineReport r;
  r.n1 = 3;
  r.n2 = 16;
  EXPECT_EQ(pipeline_bound(r), 12u + 4 * 16 * 4 + 160 + 6);
  EXPECT_EQ(pipeline_headline_bound(128), 4u * 128 * 7 + 14 * 128);
  EXPECT_EQ(pipeline_headline_bound(100), 4u * 100 * 7 + 14 * 100);
}

}  // namespace
}  // namespace tspan
