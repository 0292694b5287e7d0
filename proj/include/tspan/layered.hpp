#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"

namespace tspan {

// Complete bipartite instance between k emitters and k collectors. Emitters
// and collectors are addressed by index (0..k-1); `emitters[i]` and
// `collectors[j]` hold the vertex ids they stand for in the host clique.
class BipartiteResidual {
 public:
  BipartiteResidual() = default;

  // `labels` is emitter-major (k*k). The matchings are derived from the
  // labels and the extremality invariants are checked; violations raise
  // InconsistentFireworks.
  static BipartiteResidual build(std::vector<Vertex> emitters, std::vector<Vertex> collectors,
                                 std::vector<Label> labels);

  std::size_t k() const { return emitters_.size(); }
  const std::vector<Vertex>& emitters() const { return emitters_; }
  const std::vector<Vertex>& collectors() const { return collectors_; }
  Label label(std::size_t e, std::size_t c) const { return labels_[e * k() + c]; }

  // Collector index matched to emitter e in S- / S+.
  std::size_t s_minus(std::size_t e) const { return s_minus_[e]; }
  std::size_t s_plus(std::size_t e) const { return s_plus_[e]; }

  // Rank (1-based) of edge (e, c) among the edges of emitter e.
  std::size_t rank(std::size_t e, std::size_t c) const { return rank_[e * k() + c]; }
  // Collector at rank i (1-based) for emitter e.
  std::size_t at_rank(std::size_t e, std::size_t i) const { return order_[e * k() + i - 1]; }

  Edge host_edge(std::size_t e, std::size_t c) const { return Edge(emitters_[e], collectors_[c]); }
  std::set<Edge> matching_edges() const;
  std::set<Edge> all_edges() const;

  // The residual as a clique on 2k vertices: emitter i is vertex i, collector
  // j is vertex k+j. Same-side edges get labels above every H label so that
  // the clique is simple; they never appear in a selection.
  SimpleClique as_clique() const;
  // Maps a host edge of this residual to the corresponding as_clique() edge.
  Edge local_edge(Edge host) const;

 private:
  std::vector<Vertex> emitters_;
  std::vector<Vertex> collectors_;
  std::vector<Label> labels_;
  std::vector<std::size_t> s_minus_;
  std::vector<std::size_t> s_plus_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> order_;
};

struct RankInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

// Closed-form doubling intervals [2^(j+2)-7, 2^(j+3)-8], j = 1..ceil(log2 k)-3,
// cut off at rank k. Empty for k <= 8.
std::vector<RankInterval> rank_intervals(std::size_t k);

// One elimination step: emitters alive before and after, and the ranks used.
struct DelegationStep {
  RankInterval interval;
  std::size_t alive_before = 0;
  std::size_t alive_after = 0;
};

// The step plan actually executed. For k a power of two it coincides with
// rank_intervals(k). Otherwise the first step drops to the largest power of
// two below k and interval sizes are scaled as ceil(8k / alive) so that the
// collectors keep an average degree of eight.
std::vector<DelegationStep> delegation_schedule(std::size_t k);

struct Delegation {
  std::size_t emitter = 0;    // eliminated emitter
  std::size_t collector = 0;  // middle of the journey
  std::size_t delegate = 0;   // surviving emitter reached through the collector
};

struct SplitResult {
  std::vector<Delegation> eliminated;  // X_a with journeys
  std::vector<std::size_t> survivors;  // X_b, ascending
};

SplitResult split_alive(const BipartiteResidual& r, const std::vector<std::size_t>& alive,
                        RankInterval interval, std::size_t target_survivors);

struct StepSelection {
  std::size_t j = 0;
  RankInterval interval;
  SplitResult split;
  std::set<Edge> journey_edges;  // J_j
  std::set<Edge> direct_edges;   // D_j
  std::vector<std::size_t> cost;  // edges charged to each eliminated emitter, same order as split
};

struct LayeredSelection {
  std::vector<StepSelection> steps;
  std::vector<std::size_t> finalists;
  std::set<Edge> last_edges;  // all edges of the finalists
  std::set<Edge> edges;       // union of everything, matchings included
};

LayeredSelection layered_delegation_detailed(const BipartiteResidual& r);
std::set<Edge> layered_delegation(const BipartiteResidual& r);

}  // namespace tspan
