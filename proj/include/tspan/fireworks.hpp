#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"

namespace tspan {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

using ArcSet = std::vector<Arc>;  // kept sorted

enum class Orientation { kInTrees, kOutTrees };

// Forest produced by the tree transformation. For in-trees every arc points
// toward the root (an emitter); for out-trees every arc points away from the
// root (a collector). `toward_root[v]` is v's neighbour on the way to its
// root and `flipped[v]` says whether that arc was reversed by the transform.
struct TreeDecomposition {
  Orientation orientation = Orientation::kInTrees;
  ArcSet arcs;
  std::vector<Vertex> roots;
  std::vector<Vertex> tree_of;
  std::vector<std::optional<Vertex>> toward_root;
  std::vector<bool> flipped;

  bool is_root(Vertex v) const { return !toward_root[v].has_value(); }
  std::vector<Edge> edges() const;
};

struct FireworksCover {
  Spanner spanner;
  std::optional<TreeDecomposition> tminus;
  std::optional<TreeDecomposition> tplus;
  std::vector<Vertex> emitters;
  std::vector<Vertex> collectors;
};

// One arc (u,v) per vertex v with {u,v} = e-(v). When two vertices share
// their minimum edge only the arc from the smaller id survives.
ArcSet build_min_digraph(const SimpleClique& c);

// In-tree transformation of a minimum digraph. Throws MalformedArcSet when a
// vertex has two incoming arcs or an arc is not an edge of c.
TreeDecomposition to_in_trees(const ArcSet& arcs, const SimpleClique& c);

// Mirror image: out-trees built from maximum edges, roots are collectors.
// A maximum edge shared by two vertices gives one arc, from the smaller id.
TreeDecomposition to_out_trees(const SimpleClique& c);

FireworksCover forward_cover(const SimpleClique& c);
FireworksCover backward_cover(const SimpleClique& c);
FireworksCover bidirectional_cover(const SimpleClique& c);

// Journey of at most two hops from non-emitter v that ends through the
// minimum edge of its last vertex. `t` must be the in-tree decomposition of c.
Journey two_hop_extreme_journey(const SimpleClique& c, const TreeDecomposition& t, Vertex v);

// Journey of at most two hops to non-collector v that leaves its first vertex
// through that vertex's maximum edge. `t` must be the out-tree decomposition.
Journey two_hop_extreme_reception(const SimpleClique& c, const TreeDecomposition& t, Vertex v);

}  // namespace tspan
