#include "tspan/fireworks.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tspan {

std::vector<Edge> TreeDecomposition::edges() const {
  std::vector<Edge> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.emplace_back(a.from, a.to);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// A shared minimum edge yields two opposite arcs; only the one leaving the
// smaller id survives when `tie_from_low`, otherwise the one leaving the
// larger id.
ArcSet min_digraph(const SimpleClique& c, bool tie_from_low) {
  ArcSet arcs;
  for (Vertex v = 0; v < c.n(); ++v) {
    const Edge e = c.extreme_edge(v, Side::kMin);
    const Vertex u = e.other(v);
    const bool shared = c.extreme_edge(u, Side::kMin) == e;
    if (shared && (tie_from_low ? u > v : u < v)) continue;
    arcs.push_back({u, v});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

ArcSet build_min_digraph(const SimpleClique& c) { return min_digraph(c, true); }

TreeDecomposition to_in_trees(const ArcSet& input, const SimpleClique& c) {
  const std::size_t n = c.n();
  std::vector<std::vector<Vertex>> out(n);
  std::vector<int> indegree(n, 0);
  for (const Arc& a : input) {
    if (a.from == a.to || a.from >= n || a.to >= n) {
      throw Error(Errc::kMalformedArcSet, "arc (" + std::to_string(a.from) + "," +
                                              std::to_string(a.to) + ") is not an edge");
    }
    if (++indegree[a.to] > 1) {
      throw Error(Errc::kMalformedArcSet, "vertex " + std::to_string(a.to) + " has indegree > 1");
    }
    out[a.from].push_back(a.to);
  }
  // Sinks are judged on the input: a sink receives at most one arc, so at
  // most one flip can ever target it.
  std::vector<bool> sink(n);
  for (Vertex v = 0; v < n; ++v) sink[v] = out[v].empty();

  TreeDecomposition t;
  t.orientation = Orientation::kInTrees;
  t.toward_root.assign(n, std::nullopt);
  t.flipped.assign(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (out[v].empty()) continue;
    auto& heads = out[v];
    const Vertex keep = *std::max_element(heads.begin(), heads.end(), [&](Vertex a, Vertex b) {
      return c.label(v, a) < c.label(v, b);
    });
    t.arcs.push_back({v, keep});
    t.toward_root[v] = keep;
    for (Vertex h : heads) {
      if (h == keep || !sink[h]) continue;
      t.arcs.push_back({h, v});
      t.toward_root[h] = v;
      t.flipped[h] = true;
    }
  }
  std::sort(t.arcs.begin(), t.arcs.end());

  t.tree_of.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = v;
    std::size_t guard = 0;
    while (t.toward_root[r]) {
      r = *t.toward_root[r];
      if (++guard > n) throw Error(Errc::kMalformedArcSet, "arc set contains a cycle");
    }
    t.tree_of[v] = r;
    if (r == v) t.roots.push_back(v);
  }
  return t;
}

TreeDecomposition to_out_trees(const SimpleClique& c) {
  // Arcs are reversed below, so the negated frame keeps the tie arc leaving
  // the larger id: in the original frame it then leaves the smaller one.
  const SimpleClique neg = c.negated();
  TreeDecomposition t = to_in_trees(min_digraph(neg, false), neg);
  t.orientation = Orientation::kOutTrees;
  for (Arc& a : t.arcs) std::swap(a.from, a.to);
  std::sort(t.arcs.begin(), t.arcs.end());
  return t;
}

namespace {

std::set<Edge> incident_to(const SimpleClique& c, const std::vector<Vertex>& roots) {
  std::set<Edge> out;
  for (Vertex r : roots) {
    for (Vertex x = 0; x < c.n(); ++x) {
      if (x != r) out.emplace(r, x);
    }
  }
  return out;
}

}  // namespace

FireworksCover forward_cover(const SimpleClique& c) {
  FireworksCover fw;
  fw.tminus = to_in_trees(build_min_digraph(c), c);
  fw.emitters = fw.tminus->roots;
  std::set<Edge> chosen = incident_to(c, fw.emitters);
  for (Edge e : fw.tminus->edges()) chosen.insert(e);
  fw.spanner = make_spanner(c.content_hash(), chosen);
  return fw;
}

FireworksCover backward_cover(const SimpleClique& c) {
  FireworksCover fw;
  fw.tplus = to_out_trees(c);
  fw.collectors = fw.tplus->roots;
  std::set<Edge> chosen = incident_to(c, fw.collectors);
  for (Edge e : fw.tplus->edges()) chosen.insert(e);
  fw.spanner = make_spanner(c.content_hash(), chosen);
  return fw;
}

FireworksCover bidirectional_cover(const SimpleClique& c) {
  FireworksCover fw;
  fw.tminus = to_in_trees(build_min_digraph(c), c);
  fw.tplus = to_out_trees(c);
  fw.emitters = fw.tminus->roots;
  fw.collectors = fw.tplus->roots;
  std::set<Edge> chosen;
  for (Edge e : fw.tminus->edges()) chosen.insert(e);
  for (Edge e : fw.tplus->edges()) chosen.insert(e);
  for (Vertex x : fw.emitters) {
    for (Vertex y : fw.collectors) {
      if (x != y) chosen.emplace(x, y);
    }
  }
  fw.spanner = make_spanner(c.content_hash(), chosen);
  return fw;
}

namespace {

// v, then up to two further vertices on the way to v's root: one if v's arc
// is original, two if it was flipped.
std::vector<Vertex> extreme_path(const TreeDecomposition& t, Vertex v) {
  if (t.is_root(v)) {
    throw Error(Errc::kIsSink, "vertex " + std::to_string(v) + " is the root of its tree");
  }
  std::vector<Vertex> path{v, *t.toward_root[v]};
  if (t.flipped[v]) path.push_back(*t.toward_root[path[1]]);
  return path;
}

Journey along(const SimpleClique& c, const std::vector<Vertex>& path) {
  Journey j;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    j.hops.push_back({path[i], path[i + 1], c.label(path[i], path[i + 1])});
  }
  return j;
}

}  // namespace

Journey two_hop_extreme_journey(const SimpleClique& c, const TreeDecomposition& t, Vertex v) {
  if (t.orientation != Orientation::kInTrees) {
    throw Error(Errc::kInvalidArgument, "emission journeys need the in-tree decomposition");
  }
  return along(c, extreme_path(t, v));
}

Journey two_hop_extreme_reception(const SimpleClique& c, const TreeDecomposition& t, Vertex v) {
  if (t.orientation != Orientation::kOutTrees) {
    throw Error(Errc::kInvalidArgument, "reception journeys need the out-tree decomposition");
  }
  std::vector<Vertex> path = extreme_path(t, v);
  std::reverse(path.begin(), path.end());
  return along(c, path);
}

}  // namespace tspan
