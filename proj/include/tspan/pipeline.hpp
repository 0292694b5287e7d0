#pragma once

#include <cstddef>
#include <variant>

#include "tspan/core.hpp"
#include "tspan/dismount.hpp"
#include "tspan/fireworks.hpp"
#include "tspan/layered.hpp"
#include "tspan/reach.hpp"

namespace tspan {

// Some vertex is neither emitter nor collector.
struct Case1 {
  DismountStep step;
};

// Every vertex is an emitter or a collector, and a matching edge is not
// extreme on its collector (min side) or on its emitter (max side).
struct Case2Dismount {
  DismountStep step;
};

// Every vertex is an emitter or a collector and both matchings are extreme on
// both sides.
struct Case2Residual {
  BipartiteResidual residual;
};

using ResidualClassification = std::variant<Case1, Case2Dismount, Case2Residual>;

// `fw` must be the bidirectional cover of c.
ResidualClassification classify_residual(const SimpleClique& c, const FireworksCover& fw);

struct PipelineReport {
  std::size_t n = 0;
  std::size_t n1 = 0;         // dismounted vertices
  std::size_t n2 = 0;         // residual size handed to layered delegations
  std::size_t base = 0;       // vertices left when the small-clique base case fired
  std::size_t case1 = 0;
  std::size_t case2_dismount = 0;
  std::size_t dismount_edges = 0;
  std::size_t base_edges = 0;
  std::size_t matching_edges = 0;
  std::size_t layered_edges = 0;
};

struct PipelineResult {
  Spanner spanner;
  PipelineReport report;
};

PipelineResult spanner_nlogn(const SimpleClique& c);

// 4*n1 + 4*n2*ceil(log2 n2) + 10*n2 + 6.
std::size_t pipeline_bound(const PipelineReport& r);
// 4*n*ceil(log2 n) + 14*n.
std::size_t pipeline_headline_bound(std::size_t n);

}  // namespace tspan
