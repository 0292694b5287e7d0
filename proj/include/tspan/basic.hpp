#pragma once

#include <optional>
#include <vector>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"

namespace tspan {

// Every vertex reaches p by time t through in_tree, and p reaches every vertex
// through out_tree using labels above t.
struct PivotCertificate {
  Vertex p = 0;
  Label t = 0;
  std::vector<Edge> in_tree;
  std::vector<Edge> out_tree;
};

std::optional<PivotCertificate> find_pivot(const SimpleClique& c);

// Checks the certificate and returns in_tree plus out_tree.
Spanner pivot_spanner(const SimpleClique& c, const PivotCertificate& cert);

struct K4Result {
  Spanner spanner;
  std::vector<std::vector<Vertex>> packed;  // quadruples, in processing order
  std::vector<Edge> removed;
};

K4Result k4_sparsify_detailed(const SimpleClique& c);
Spanner k4_sparsify(const SimpleClique& c);

}  // namespace tspan
