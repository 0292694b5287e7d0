#pragma once

#include <cstdint>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"

namespace tspan {

struct MinSpannerResult {
  std::size_t size = 0;
  Spanner witness;
  std::uint64_t explored = 0;  // subsets tested
};

// Exhaustive search over edge subsets in order of size. The first temporally
// connected subset found is minimum; among equal sizes the one with the
// smallest edge-index bitmask wins.
MinSpannerResult min_spanner(const SimpleClique& c, std::size_t max_n = 7);

// Lower bound every temporal spanner of a clique with n >= 4 vertices obeys.
inline std::size_t gossip_lower_bound(std::size_t n) { return n >= 4 ? 2 * n - 4 : n - 1; }

}  // namespace tspan
