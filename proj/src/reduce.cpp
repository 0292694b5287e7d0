#include "tspan/reduce.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tspan {

Reduction to_simple(const MultiLabelClique& m) {
  if (m.n() < 2) throw Error(Errc::kNTooSmall, "reduction needs n >= 2");
  std::vector<std::pair<Label, Edge>> order;
  for (Edge e : m.edges()) order.emplace_back(m.labels(e).front(), e);
  std::sort(order.begin(), order.end());

  Reduction out;
  std::vector<Label> table(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& [rep, e] = order[i];
    table[edge_index(m.n(), e)] = static_cast<Label>(i);
    out.map.entries.push_back({e, static_cast<Label>(i), rep});
  }
  out.simple = SimpleClique::from_labels(m.n(), std::move(table));
  out.map.simple_hash = out.simple.content_hash();
  out.map.original_hash = m.content_hash();
  return out;
}

Spanner lift_spanner(const Spanner& s, const LabelMap& map) {
  if (s.instance_hash != map.simple_hash) {
    throw Error(Errc::kMapMismatch, "spanner does not belong to the map's simple instance");
  }
  std::set<Edge> known;
  for (const auto& entry : map.entries) known.insert(entry.edge);
  for (Edge e : s.edges) {
    if (!known.contains(e)) {
      throw Error(Errc::kMapMismatch,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} missing from map");
    }
  }
  return Spanner{map.original_hash, s.edges};
}

}  // namespace tspan
