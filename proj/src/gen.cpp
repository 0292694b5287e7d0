#include "tspan/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tspan {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

SimpleClique random_clique(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::kNTooSmall, "random_clique needs n >= 2");
  std::vector<Label> labels(edge_count(n));
  std::iota(labels.begin(), labels.end(), Label{0});
  Rng rng(seed);
  rng.shuffle(labels);
  return SimpleClique::from_labels(n, std::move(labels));
}

MultiLabelClique random_multi_clique(std::size_t n, std::size_t max_labels, Label label_range,
                                     std::uint64_t seed) {
  if (n < 2) throw Error(Errc::kNTooSmall, "random_multi_clique needs n >= 2");
  if (max_labels == 0 || label_range <= 0) {
    throw Error(Errc::kInvalidArgument, "need at least one label and a positive range");
  }
  Rng rng(seed);
  std::vector<std::pair<Edge, std::vector<Label>>> entries;
  for (Edge e : all_edges(n)) {
    const std::size_t count = 1 + rng.below(max_labels);
    std::vector<Label> ls;
    for (std::size_t i = 0; i < count; ++i) {
      ls.push_back(static_cast<Label>(rng.below(static_cast<std::uint64_t>(label_range))));
    }
    entries.emplace_back(e, std::move(ls));
  }
  return MultiLabelClique::build(n, entries);
}

SimpleClique gen_non_pivotable(std::size_t n) {
  if (n < 6) throw Error(Errc::kNTooSmall, "non-pivotable construction needs n >= 6");
  constexpr Vertex u = 0, v = 1, w = 2;
  std::vector<std::pair<Edge, Label>> entries;
  entries.emplace_back(Edge(u, v), 0);
  entries.emplace_back(Edge(v, w), 1);

  std::vector<Vertex> rest{u};
  for (Vertex x = 3; x < n; ++x) rest.push_back(x);
  Label next = 2;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) entries.emplace_back(Edge(rest[i], rest[j]), next++);
  }
  for (Vertex x = 3; x < n; ++x) entries.emplace_back(Edge(v, x), next++);
  entries.emplace_back(Edge(u, w), next++);
  for (Vertex x = 3; x < n; ++x) entries.emplace_back(Edge(w, x), next++);
  return SimpleClique::build(n, entries);
}

SimpleClique gen_non_dismountable(std::size_t m) {
  if (m < 1) throw Error(Errc::kNTooSmall, "non-dismountable construction needs m >= 1");
  const std::size_t n = 4 * m;
  const Label total = static_cast<Label>(edge_count(n));
  const Label copies = static_cast<Label>(m);
  std::map<Edge, Label> fixed;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex b = static_cast<Vertex>(4 * i);
    const Label lo = 3 * static_cast<Label>(i);
    const Label hi = total - 3 * copies + 3 * static_cast<Label>(i);
    fixed[Edge(b + 0, b + 1)] = lo;
    fixed[Edge(b + 1, b + 3)] = lo + 1;
    fixed[Edge(b + 0, b + 2)] = lo + 2;
    fixed[Edge(b + 1, b + 2)] = hi;
    fixed[Edge(b + 0, b + 3)] = hi + 1;
    fixed[Edge(b + 2, b + 3)] = hi + 2;
  }
  std::vector<std::pair<Edge, Label>> entries(fixed.begin(), fixed.end());
  Label next = 3 * copies;
  for (Edge e : all_edges(n)) {
    if (!fixed.contains(e)) entries.emplace_back(e, next++);
  }
  return SimpleClique::build(n, entries);
}

BipartiteResidual random_residual(std::size_t k, std::uint64_t seed) {
  if (k < 2) throw Error(Errc::kNTooSmall, "random_residual needs k >= 2");
  Rng rng(seed);
  std::vector<std::size_t> low(k);
  std::iota(low.begin(), low.end(), std::size_t{0});
  rng.shuffle(low);
  // S+ must avoid the S- edges; a derangement relative to `low` does it.
  std::vector<std::size_t> high;
  do {
    high = low;
    rng.shuffle(high);
  } while ([&] {
    for (std::size_t e = 0; e < k; ++e) {
      if (high[e] == low[e]) return true;
    }
    return false;
  }());

  const Label kk = static_cast<Label>(k);
  std::vector<Label> middle(k * k - 2 * k);
  std::iota(middle.begin(), middle.end(), kk);
  rng.shuffle(middle);
  std::vector<std::size_t> low_order(k);
  std::iota(low_order.begin(), low_order.end(), std::size_t{0});
  rng.shuffle(low_order);
  std::vector<std::size_t> high_order = low_order;
  rng.shuffle(high_order);

  std::vector<Label> labels(k * k, -1);
  for (std::size_t e = 0; e < k; ++e) {
    labels[e * k + low[e]] = static_cast<Label>(low_order[e]);
    labels[e * k + high[e]] = kk * kk - kk + static_cast<Label>(high_order[e]);
  }
  std::size_t next = 0;
  for (Label& l : labels) {
    if (l < 0) l = middle[next++];
  }
  std::vector<Vertex> emitters(k), collectors(k);
  std::iota(emitters.begin(), emitters.end(), Vertex{0});
  std::iota(collectors.begin(), collectors.end(), static_cast<Vertex>(k));
  return BipartiteResidual::build(std::move(emitters), std::move(collectors), std::move(labels));
}

namespace {

struct FixtureData {
  std::size_t n;
  std::vector<Label> labels;  // lexicographic edge order
};

const std::map<std::string, FixtureData, std::less<>>& fixture_table() {
  static const std::map<std::string, FixtureData, std::less<>> table = {
      {"fix6", {6, {10, 7, 3, 8, 6, 0, 5, 12, 13, 2, 4, 11, 9, 14, 1}}},
      {"fix8", {8, {26, 2, 19, 13, 27, 17, 3, 0, 5, 15, 12, 11, 1, 23, 10, 9, 8, 24,
                    20, 4, 25, 22, 21, 6, 14, 18, 7, 16}}},
      {"fixp5", {5, {5, 7, 2, 3, 8, 1, 6, 9, 0, 4}}},
      {"fixnp5", {5, {0, 5, 1, 3, 4, 6, 7, 2, 9, 8}}},
      {"fixd5", {5, {0, 3, 2, 9, 4, 6, 1, 5, 7, 8}}},
      // v0v1 v0v2 v0v3 v1v2 v1v3 v2v3
      {"fixnd4", {4, {2, 5, 3, 4, 0, 1}}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, data] : fixture_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SimpleClique fixture(std::string_view name) {
  const auto& table = fixture_table();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::kUnknownFixture, "no fixture named '" + std::string(name) + "'");
  return SimpleClique::from_labels(it->second.n, it->second.labels);
}

}  // namespace tspan
