#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "tspan/core.hpp"

namespace tspan {

enum class Mode { kStrict, kNonStrict };

// A single time-stamped traversal of an undirected edge.
struct Hop {
  Vertex from = 0;
  Vertex to = 0;
  Label time = 0;

  friend bool operator==(const Hop&, const Hop&) = default;
};

struct Journey {
  std::vector<Hop> hops;

  bool empty() const { return hops.empty(); }
  Vertex source() const { return hops.front().from; }
  Vertex target() const { return hops.back().to; }
  std::vector<Edge> edges() const;

  friend bool operator==(const Journey&, const Journey&) = default;
};

// Checks chaining, monotonicity for `mode`, and that every hop time is a label
// of the traversed edge.
bool is_journey(const SimpleClique& c, const Journey& j, Mode mode);

struct Spanner {
  std::uint64_t instance_hash = 0;
  std::vector<Edge> edges;  // sorted, unique

  std::size_t size() const { return edges.size(); }
};

Spanner make_spanner(std::uint64_t instance_hash, const std::set<Edge>& edges);

// One usable (edge, time) pair. Simple cliques give one contact per edge,
// multi-label cliques one per label.
struct Contact {
  Vertex u = 0;
  Vertex v = 0;
  Label time = 0;
};

// Sorted by (time, u, v), ready for a sweep.
std::vector<Contact> contacts_of(const SimpleClique& c, std::span<const Edge> universe);
std::vector<Contact> contacts_of(const MultiLabelClique& c, std::span<const Edge> universe);

// Result of a sweep: time[v] plus the hop through which v was first reached.
// For earliest-arrival trees the source has time kNegInf and unreachable
// vertices kPosInf. Latest-departure trees use the mirrored convention and
// their parent hops point toward the target.
struct ReachTree {
  Vertex root = 0;
  std::vector<Label> time;
  std::vector<std::optional<Hop>> parent;

  bool reached(Vertex v) const { return v == root || parent[v].has_value(); }
  bool spans_all() const;
  std::vector<Edge> tree_edges() const;
};

ReachTree earliest_arrival_tree(std::size_t n, std::span<const Contact> sorted, Vertex source,
                                Mode mode, Label min_start = kNegInf);
// Journeys ending at `target` with every label ≤ max_end; time[v] is the
// latest possible first-hop label from v, kNegInf if none, kPosInf at target.
ReachTree latest_departure_tree(std::size_t n, std::span<const Contact> sorted, Vertex target,
                                Mode mode, Label max_end = kPosInf);

std::vector<Label> earliest_arrivals(const SimpleClique& c, Vertex source, Mode mode,
                                     std::span<const Edge> universe, Label min_start = kNegInf);
std::vector<Label> earliest_arrivals(const MultiLabelClique& c, Vertex source, Mode mode,
                                     std::span<const Edge> universe, Label min_start = kNegInf);
std::vector<Label> latest_departures(const SimpleClique& c, Vertex target, Mode mode,
                                     std::span<const Edge> universe, Label max_end = kPosInf);

// Reconstructs the journey recorded in an earliest-arrival tree.
std::optional<Journey> journey_to(const ReachTree& tree, Vertex source, Vertex target);

bool is_temporally_connected(std::size_t n, std::span<const Contact> sorted, Mode mode);
bool is_temporally_connected(const SimpleClique& c, Mode mode, std::span<const Edge> universe);
bool is_temporally_connected(const MultiLabelClique& c, Mode mode,
                             std::span<const Edge> universe);

// Throws InstanceMismatch when the spanner was built for another instance or
// names a pair that is not an edge of it.
bool verify_spanner(const SimpleClique& c, const Spanner& s, Mode mode);
bool verify_spanner(const MultiLabelClique& c, const Spanner& s, Mode mode);

}  // namespace tspan
