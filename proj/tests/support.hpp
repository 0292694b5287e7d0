#pragma once

// Independent reference implementations used to pin expected values. None of
// them share code with the library's sweeps or searches.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"

namespace tspan::testing {

// Edge from a two-letter name: "ad" is {0, 3}.
Edge E(std::string_view name);
std::set<Edge> edges_of(std::string_view names);  // "ad bc cd"

// Clique from "ab:10 ac:7 ..." with letter vertices.
SimpleClique lettered(std::size_t n, std::string_view spec);

// Every simple path from `source` whose labels increase (strictly or not),
// explored by depth-first enumeration over universe edges.
struct BruteReach {
  std::vector<bool> reached;
  std::vector<Label> earliest;  // kPosInf when unreachable, kNegInf at source
};

BruteReach brute_from(const SimpleClique& c, Vertex source, Mode mode,
                      const std::vector<Edge>& universe, Label min_start = kNegInf);
BruteReach brute_from(const MultiLabelClique& c, Vertex source, Mode mode,
                      const std::vector<Edge>& universe);
// Latest first-hop label over journeys from each vertex to `target` with every
// label <= max_end; kNegInf if none, kPosInf at the target.
std::vector<Label> brute_latest_departure(const SimpleClique& c, Vertex target, Mode mode,
                                          const std::vector<Edge>& universe,
                                          Label max_end = kPosInf);
bool brute_connected(const SimpleClique& c, Mode mode, const std::vector<Edge>& universe);

// All journeys of a simple clique (strict), as edge sequences.
std::vector<std::vector<Edge>> all_strict_journeys(const SimpleClique& c);

// Direct reading of 1-hop dismountability: some {v,u} is e-(u) and some
// {v,w} is e+(w).
bool one_hop_dismountable(const SimpleClique& c, Vertex v);

std::vector<Edge> to_vector(const std::set<Edge>& s);

}  // namespace tspan::testing
