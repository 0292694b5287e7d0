#include "tspan/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace tspan {

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
  throw Error(Errc::kInconsistentFireworks, why);
}

// The single other vertex of the two-vertex tree rooted at `root`.
Vertex partner(const TreeDecomposition& t, Vertex root) {
  std::optional<Vertex> found;
  for (Vertex x = 0; x < t.tree_of.size(); ++x) {
    if (x == root || t.tree_of[x] != root) continue;
    if (found) inconsistent("tree of " + std::to_string(root) + " has more than two vertices");
    found = x;
  }
  if (!found) inconsistent("tree of " + std::to_string(root) + " is a single vertex");
  return *found;
}

Hop hop(const SimpleClique& c, Vertex a, Vertex b) { return Hop{a, b, c.label(a, b)}; }

}  // namespace

ResidualClassification classify_residual(const SimpleClique& c, const FireworksCover& fw) {
  if (!fw.tminus || !fw.tplus) inconsistent("classification needs both tree decompositions");
  const TreeDecomposition& tm = *fw.tminus;
  const TreeDecomposition& tp = *fw.tplus;
  const std::size_t n = c.n();

  std::vector<char> emitter(n, 0), collector(n, 0);
  for (Vertex x : fw.emitters) emitter[x] = 1;
  for (Vertex x : fw.collectors) collector[x] = 1;

  for (Vertex v = 0; v < n; ++v) {
    if (emitter[v] || collector[v]) continue;
    return Case1{DismountStep{v, two_hop_extreme_journey(c, tm, v),
                              two_hop_extreme_reception(c, tp, v)}};
  }

  if (n % 2 != 0 || fw.emitters.size() != n / 2 || fw.collectors.size() != n / 2) {
    inconsistent("emitters and collectors do not split the vertices in halves");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (emitter[v] && collector[v]) inconsistent("vertex " + std::to_string(v) + " is both emitter and collector");
  }

  // s_minus[x] / s_plus[x]: the matching partner of x on either side.
  std::vector<Vertex> s_minus(n), s_plus(n);
  for (Vertex u : fw.emitters) {
    const Vertex v = partner(tm, u);
    if (!collector[v]) inconsistent("in-tree of emitter " + std::to_string(u) + " holds an emitter");
    if (c.extreme_edge(u, Side::kMin) != Edge(u, v)) inconsistent("tree edge is not the emitter's minimum");
    s_minus[u] = v;
    s_minus[v] = u;
  }
  for (Vertex x : fw.collectors) {
    const Vertex w = partner(tp, x);
    if (!emitter[w]) inconsistent("out-tree of collector " + std::to_string(x) + " holds a collector");
    if (c.extreme_edge(x, Side::kMax) != Edge(x, w)) inconsistent("tree edge is not the collector's maximum");
    s_plus[x] = w;
    s_plus[w] = x;
  }

  for (Vertex u : fw.emitters) {
    const Vertex v = s_minus[u];
    Vertex lowest = u;
    for (Vertex e : fw.emitters) {
      if (c.label(e, v) < c.label(lowest, v)) lowest = e;
    }
    if (lowest == u) continue;
    // lowest -> v -> u ends through the minimum edge of u.
    Journey out{{hop(c, lowest, v), hop(c, v, u)}};
    Journey in{{hop(c, s_plus[lowest], lowest)}};
    return Case2Dismount{DismountStep{lowest, std::move(out), std::move(in)}};
  }
  for (Vertex x : fw.collectors) {
    const Vertex u = s_plus[x];
    Vertex highest = x;
    for (Vertex y : fw.collectors) {
      if (c.label(u, y) > c.label(u, highest)) highest = y;
    }
    if (highest == x) continue;
    // x -> u -> highest leaves x through the maximum edge of x.
    Journey out{{hop(c, highest, s_minus[highest])}};
    Journey in{{hop(c, x, u), hop(c, u, highest)}};
    return Case2Dismount{DismountStep{highest, std::move(out), std::move(in)}};
  }

  std::vector<Label> labels;
  labels.reserve(n * n / 4);
  for (Vertex u : fw.emitters) {
    for (Vertex x : fw.collectors) labels.push_back(c.label(u, x));
  }
  return Case2Residual{BipartiteResidual::build(fw.emitters, fw.collectors, std::move(labels))};
}

PipelineResult spanner_nlogn(const SimpleClique& c) {
  PipelineResult res;
  PipelineReport& rep = res.report;
  rep.n = c.n();
  std::set<Edge> chosen;
  std::vector<Vertex> ids(c.n());
  std::iota(ids.begin(), ids.end(), Vertex{0});
  SimpleClique cur = c;

  auto take = [&](Edge local) {
    return chosen.emplace(ids[local.u], ids[local.v]).second;
  };

  while (true) {
    if (cur.n() <= 4) {
      rep.base = cur.n();
      for (Edge e : cur.edges()) rep.base_edges += take(e);
      break;
    }
    const FireworksCover fw = bidirectional_cover(cur);
    ResidualClassification cls = classify_residual(cur, fw);
    if (auto* res2 = std::get_if<Case2Residual>(&cls)) {
      rep.n2 = cur.n();
      for (Edge e : res2->residual.matching_edges()) rep.matching_edges += take(e);
      for (Edge e : layered_delegation(res2->residual)) rep.layered_edges += take(e);
      break;
    }
    const DismountStep& step = std::holds_alternative<Case1>(cls) ? std::get<Case1>(cls).step
                                                                  : std::get<Case2Dismount>(cls).step;
    if (std::holds_alternative<Case1>(cls)) {
      ++rep.case1;
    } else {
      ++rep.case2_dismount;
    }
    ++rep.n1;
    for (Edge e : step.edges()) rep.dismount_edges += take(e);

    std::vector<Vertex> keep;
    for (Vertex x = 0; x < cur.n(); ++x) {
      if (x != step.v) keep.push_back(x);
    }
    ids.erase(ids.begin() + step.v);
    cur = cur.induced(keep);
  }

  res.spanner = make_spanner(c.content_hash(), chosen);
  return res;
}

std::size_t pipeline_bound(const PipelineReport& r) {
  const std::size_t log_n2 = r.n2 <= 1 ? 0 : std::bit_width(r.n2 - 1);
  return 4 * r.n1 + 4 * r.n2 * log_n2 + 10 * r.n2 + 6;
}

std::size_t pipeline_headline_bound(std::size_t n) {
  const std::size_t log_n = n <= 1 ? 0 : std::bit_width(n - 1);
  return 4 * n * log_n + 14 * n;
}

}  // namespace tspan
