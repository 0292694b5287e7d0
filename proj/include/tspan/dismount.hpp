#pragma once

#include <optional>
#include <vector>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"

namespace tspan {

// A dismounted vertex v with its two delegation witnesses: out_journey leaves
// v and enters its last vertex through that vertex's minimum edge;
// in_journey ends at v and leaves its first vertex through that vertex's
// maximum edge.
struct DismountStep {
  Vertex v = 0;
  Journey out_journey;
  Journey in_journey;

  std::vector<Edge> edges() const;
};

// Witnesses are searched by increasing hop count. Among witnesses with the
// fewest hops, the out-journey with the latest final label and the
// in-journey with the earliest first label are preferred, then the smaller
// end vertex.
std::optional<Journey> find_emission_delegation(const SimpleClique& c, Vertex v, std::size_t k);
std::optional<Journey> find_reception_delegation(const SimpleClique& c, Vertex v, std::size_t k);

std::optional<DismountStep> find_dismountable(const SimpleClique& c, std::size_t k);

struct DismountResult {
  Spanner spanner;
  std::vector<DismountStep> steps;  // vertex ids of the input clique
};

std::optional<DismountResult> dismount_fully_detailed(const SimpleClique& c, std::size_t k);
std::optional<Spanner> dismount_fully(const SimpleClique& c, std::size_t k);

// Re-expresses a journey on a subclique in the ids of its host clique.
Journey lift_journey(const Journey& j, const std::vector<Vertex>& ids);

}  // namespace tspan
