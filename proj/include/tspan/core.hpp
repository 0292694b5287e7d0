#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tspan/error.hpp"

namespace tspan {

using Vertex = std::uint32_t;
using Label = std::int64_t;

// Sentinels used by the reachability sweeps. Instance labels must lie strictly
// between them.
inline constexpr Label kNegInf = std::numeric_limits<Label>::min();
inline constexpr Label kPosInf = std::numeric_limits<Label>::max();

inline Label negate_time(Label t) {
  if (t == kNegInf) return kPosInf;
  if (t == kPosInf) return kNegInf;
  return -t;
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  // Stores the endpoints in canonical (smaller, larger) order.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::size_t edge_count(std::size_t n);
// Position of the canonical edge in lexicographic order.
std::size_t edge_index(std::size_t n, Edge e);
Edge edge_at(std::size_t n, std::size_t index);
// All canonical edges of K_n in lexicographic order.
std::vector<Edge> all_edges(std::size_t n);

enum class Side { kMin, kMax };

class SimpleClique {
 public:
  SimpleClique() = default;

  // Validates totality and local injectivity.
  static SimpleClique build(std::size_t n, std::span<const std::pair<Edge, Label>> labels);
  // Labels given in lexicographic edge order.
  static SimpleClique from_labels(std::size_t n, std::vector<Label> labels);

  std::size_t n() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  Label label(Edge e) const { return labels_[edge_index(n_, e)]; }
  Label label(Vertex a, Vertex b) const { return label(Edge(a, b)); }
  const std::vector<Label>& labels() const { return labels_; }
  std::vector<Edge> edges() const { return all_edges(n_); }

  Edge extreme_edge(Vertex v, Side side) const;

  // Same instance with every label negated: minima become maxima.
  SimpleClique negated() const;
  // Subclique on `keep` (ascending ids); vertex keep[i] becomes i.
  SimpleClique induced(std::span<const Vertex> keep) const;

  std::uint64_t content_hash() const;

  friend bool operator==(const SimpleClique&, const SimpleClique&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Label> labels_;
};

class MultiLabelClique {
 public:
  MultiLabelClique() = default;

  // Label sets are sorted and deduplicated; an empty set is rejected.
  static MultiLabelClique build(std::size_t n,
                                std::span<const std::pair<Edge, std::vector<Label>>> labels);

  std::size_t n() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels(Edge e) const { return labels_[edge_index(n_, e)]; }
  std::vector<Edge> edges() const { return all_edges(n_); }

  std::uint64_t content_hash() const;

  friend bool operator==(const MultiLabelClique&, const MultiLabelClique&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Label>> labels_;
};

// Per-vertex incident edges of a chosen universe, sorted by label. Ranks are
// 1-based: rank 1 is the minimum edge at that vertex within the universe.
class RankTable {
 public:
  RankTable(const SimpleClique& c, std::span<const Edge> universe);

  std::size_t degree(Vertex v) const { return sorted_[v].size(); }
  Edge rank_edge(Vertex v, std::size_t i) const;
  // Zero if `e` is not incident to v inside the universe.
  std::size_t rank_of(Vertex v, Edge e) const;

 private:
  std::vector<std::vector<Edge>> sorted_;
};

}  // namespace tspan
