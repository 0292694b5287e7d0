#pragma once

#include <cstdint>
#include <vector>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"

namespace tspan {

struct LabelMapEntry {
  Edge edge;
  Label new_label = 0;
  Label original_label = 0;

  friend bool operator==(const LabelMapEntry&, const LabelMapEntry&) = default;
};

// Correspondence between a multi-label clique and its simple relabeling.
// Entries are ordered by new label.
struct LabelMap {
  std::uint64_t simple_hash = 0;
  std::uint64_t original_hash = 0;
  std::vector<LabelMapEntry> entries;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

struct Reduction {
  SimpleClique simple;
  LabelMap map;
};

// Keeps each edge's smallest label, then renumbers all edges 0..m-1 by
// (kept label, edge id). Strict journeys of the result are non-decreasing
// journeys of the input.
Reduction to_simple(const MultiLabelClique& m);

// Throws MapMismatch if `s` was not built on the map's simple instance.
Spanner lift_spanner(const Spanner& s, const LabelMap& map);

}  // namespace tspan
