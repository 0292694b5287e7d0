#include "tspan/reach.hpp"

#include <algorithm>
#include <string>

namespace tspan {

namespace {

bool contact_less(const Contact& a, const Contact& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

bool usable(Label arrival, Label t, Mode mode) {
  return mode == Mode::kStrict ? arrival < t : arrival <= t;
}

std::vector<Contact> mirrored(std::span<const Contact> sorted) {
  std::vector<Contact> out(sorted.begin(), sorted.end());
  for (Contact& k : out) k.time = -k.time;
  std::sort(out.begin(), out.end(), contact_less);
  return out;
}

void check_universe(std::size_t n, std::span<const Edge> universe) {
  for (Edge e : universe) {
    if (e.u == e.v || e.v >= n) {
      throw Error(Errc::kInstanceMismatch, "pair {" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + "} is not an edge");
    }
  }
}

}  // namespace

std::vector<Edge> Journey::edges() const {
  std::vector<Edge> out;
  out.reserve(hops.size());
  for (const Hop& h : hops) out.emplace_back(h.from, h.to);
  return out;
}

bool is_journey(const SimpleClique& c, const Journey& j, Mode mode) {
  for (std::size_t i = 0; i < j.hops.size(); ++i) {
    const Hop& h = j.hops[i];
    if (h.from == h.to || h.from >= c.n() || h.to >= c.n()) return false;
    if (c.label(h.from, h.to) != h.time) return false;
    if (i > 0) {
      const Hop& p = j.hops[i - 1];
      if (p.to != h.from || !usable(p.time, h.time, mode)) return false;
    }
  }
  return true;
}

Spanner make_spanner(std::uint64_t instance_hash, const std::set<Edge>& edges) {
  return Spanner{instance_hash, std::vector<Edge>(edges.begin(), edges.end())};
}

std::vector<Contact> contacts_of(const SimpleClique& c, std::span<const Edge> universe) {
  check_universe(c.n(), universe);
  std::vector<Contact> out;
  out.reserve(universe.size());
  for (Edge e : universe) out.push_back({e.u, e.v, c.label(e)});
  std::sort(out.begin(), out.end(), contact_less);
  return out;
}

std::vector<Contact> contacts_of(const MultiLabelClique& c, std::span<const Edge> universe) {
  check_universe(c.n(), universe);
  std::vector<Contact> out;
  for (Edge e : universe) {
    for (Label l : c.labels(e)) out.push_back({e.u, e.v, l});
  }
  std::sort(out.begin(), out.end(), contact_less);
  return out;
}

bool ReachTree::spans_all() const {
  for (Vertex v = 0; v < time.size(); ++v) {
    if (!reached(v)) return false;
  }
  return true;
}

std::vector<Edge> ReachTree::tree_edges() const {
  std::vector<Edge> out;
  for (const auto& p : parent) {
    if (p) out.emplace_back(p->from, p->to);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReachTree earliest_arrival_tree(std::size_t n, std::span<const Contact> sorted, Vertex source,
                                Mode mode, Label min_start) {
  ReachTree tree;
  tree.root = source;
  tree.time.assign(n, kPosInf);
  tree.parent.assign(n, std::nullopt);
  tree.time[source] = kNegInf;
  auto& arr = tree.time;

  // Within a block of equal labels a newly reached vertex may only be used
  // again in non-strict mode, hence the repeated passes there.
  auto relax = [&](const Contact& k, Vertex x, Vertex y) {
    if (arr[y] != kPosInf || !usable(arr[x], k.time, mode)) return false;
    arr[y] = k.time;
    tree.parent[y] = Hop{x, y, k.time};
    return true;
  };

  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].time == sorted[i].time) ++j;
    if (sorted[i].time >= min_start) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t q = i; q < j; ++q) {
          changed |= relax(sorted[q], sorted[q].u, sorted[q].v);
          changed |= relax(sorted[q], sorted[q].v, sorted[q].u);
        }
        if (mode == Mode::kStrict) break;
      }
    }
    i = j;
  }
  return tree;
}

ReachTree latest_departure_tree(std::size_t n, std::span<const Contact> sorted, Vertex target,
                                Mode mode, Label max_end) {
  const std::vector<Contact> mirror = mirrored(sorted);
  ReachTree back = earliest_arrival_tree(n, mirror, target, mode, negate_time(max_end));
  ReachTree tree;
  tree.root = target;
  tree.time.resize(n);
  tree.parent.assign(n, std::nullopt);
  for (Vertex v = 0; v < n; ++v) {
    tree.time[v] = negate_time(back.time[v]);
    if (back.parent[v]) {
      const Hop& h = *back.parent[v];
      tree.parent[v] = Hop{h.to, h.from, -h.time};
    }
  }
  return tree;
}

std::vector<Label> earliest_arrivals(const SimpleClique& c, Vertex source, Mode mode,
                                     std::span<const Edge> universe, Label min_start) {
  return earliest_arrival_tree(c.n(), contacts_of(c, universe), source, mode, min_start).time;
}

std::vector<Label> earliest_arrivals(const MultiLabelClique& c, Vertex source, Mode mode,
                                     std::span<const Edge> universe, Label min_start) {
  return earliest_arrival_tree(c.n(), contacts_of(c, universe), source, mode, min_start).time;
}

std::vector<Label> latest_departures(const SimpleClique& c, Vertex target, Mode mode,
                                     std::span<const Edge> universe, Label max_end) {
  return latest_departure_tree(c.n(), contacts_of(c, universe), target, mode, max_end).time;
}

std::optional<Journey> journey_to(const ReachTree& tree, Vertex source, Vertex target) {
  if (tree.root != source || !tree.reached(target)) return std::nullopt;
  Journey j;
  for (Vertex v = target; v != source; v = tree.parent[v]->from) j.hops.push_back(*tree.parent[v]);
  std::reverse(j.hops.begin(), j.hops.end());
  return j;
}

bool is_temporally_connected(std::size_t n, std::span<const Contact> sorted, Mode mode) {
  for (Vertex s = 0; s < n; ++s) {
    if (!earliest_arrival_tree(n, sorted, s, mode).spans_all()) return false;
  }
  return true;
}

bool is_temporally_connected(const SimpleClique& c, Mode mode, std::span<const Edge> universe) {
  return is_temporally_connected(c.n(), contacts_of(c, universe), mode);
}

bool is_temporally_connected(const MultiLabelClique& c, Mode mode,
                             std::span<const Edge> universe) {
  return is_temporally_connected(c.n(), contacts_of(c, universe), mode);
}

namespace {

template <typename Instance>
bool verify_impl(const Instance& c, const Spanner& s, Mode mode) {
  if (s.instance_hash != c.content_hash()) {
    throw Error(Errc::kInstanceMismatch, "spanner belongs to a different instance");
  }
  return is_temporally_connected(c, mode, s.edges);
}

}  // namespace

bool verify_spanner(const SimpleClique& c, const Spanner& s, Mode mode) {
  return verify_impl(c, s, mode);
}

bool verify_spanner(const MultiLabelClique& c, const Spanner& s, Mode mode) {
  return verify_impl(c, s, mode);
}

}  // namespace tspan
