#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tspan/core.hpp"
#include "tspan/layered.hpp"

namespace tspan {

// Seeded source used by every generator. std::mt19937_64 output is fixed by
// the standard; bounded draws go through `below` so results do not depend on
// the standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Labels form a uniform permutation of 0..C(n,2)-1 over lexicographic edges.
SimpleClique random_clique(std::size_t n, std::uint64_t seed);

// Every edge gets between 1 and max_labels labels drawn from [0, label_range).
MultiLabelClique random_multi_clique(std::size_t n, std::size_t max_labels, Label label_range,
                                     std::uint64_t seed);

// Two-period construction with no pivot vertex; n >= 6.
SimpleClique gen_non_pivotable(std::size_t n);

// m vertex-disjoint copies of a non-dismountable K4 (n = 4m) glued by edges
// carrying the intermediate labels.
SimpleClique gen_non_dismountable(std::size_t m);

// A bipartite residual with k emitters and k collectors: the k smallest labels
// form the matching S-, the k largest form S+, and the rest are shuffled.
BipartiteResidual random_residual(std::size_t k, std::uint64_t seed);

const std::vector<std::string>& fixture_names();
SimpleClique fixture(std::string_view name);

}  // namespace tspan
