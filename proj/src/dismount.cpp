#include "tspan/dismount.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tspan {

std::vector<Edge> DismountStep::edges() const {
  std::vector<Edge> out = out_journey.edges();
  const std::vector<Edge> in = in_journey.edges();
  out.insert(out.end(), in.begin(), in.end());
  return out;
}

std::optional<Journey> find_emission_delegation(const SimpleClique& c, Vertex v, std::size_t k) {
  const std::size_t n = c.n();
  if (k == 0 || n < 2) return std::nullopt;

  // arrival[h][x]: earliest arrival at x from v using at most h hops;
  // via[h][x]: predecessor when that arrival needs exactly h hops.
  std::vector<std::vector<Label>> arrival(k, std::vector<Label>(n, kPosInf));
  std::vector<std::vector<Vertex>> via(k, std::vector<Vertex>(n, 0));
  arrival[0][v] = kNegInf;
  for (std::size_t h = 1; h < k; ++h) {
    arrival[h] = arrival[h - 1];
    for (Vertex y = 0; y < n; ++y) {
      for (Vertex x = 0; x < n; ++x) {
        if (x == y) continue;
        const Label t = c.label(x, y);
        if (arrival[h - 1][x] < t && t < arrival[h][y]) {
          arrival[h][y] = t;
          via[h][y] = x;
        }
      }
    }
  }

  std::vector<Edge> minimum(n);
  for (Vertex u = 0; u < n; ++u) minimum[u] = c.extreme_edge(u, Side::kMin);

  for (std::size_t h = 1; h <= k; ++h) {
    const auto& before = arrival[h - 1];
    std::optional<Vertex> best;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const Vertex x = minimum[u].other(u);
      const Label t = c.label(minimum[u]);
      if (!(before[x] < t)) continue;
      if (!best || t > c.label(minimum[*best])) best = u;
    }
    if (!best) continue;

    Journey j;
    Vertex cur = *best;
    Vertex prev = minimum[cur].other(cur);
    j.hops.push_back({prev, cur, c.label(prev, cur)});
    cur = prev;
    for (std::size_t layer = h - 1; cur != v; --layer) {
      while (arrival[layer - 1][cur] == arrival[layer][cur]) --layer;
      prev = via[layer][cur];
      j.hops.push_back({prev, cur, c.label(prev, cur)});
      cur = prev;
    }
    std::reverse(j.hops.begin(), j.hops.end());
    return j;
  }
  return std::nullopt;
}

std::optional<Journey> find_reception_delegation(const SimpleClique& c, Vertex v, std::size_t k) {
  // A reception journey read backwards in time is an emission journey of the
  // negated instance.
  auto mirror = find_emission_delegation(c.negated(), v, k);
  if (!mirror) return std::nullopt;
  Journey j;
  for (auto it = mirror->hops.rbegin(); it != mirror->hops.rend(); ++it) {
    j.hops.push_back({it->to, it->from, -it->time});
  }
  return j;
}

std::optional<DismountStep> find_dismountable(const SimpleClique& c, std::size_t k) {
  for (Vertex v = 0; v < c.n(); ++v) {
    auto out = find_emission_delegation(c, v, k);
    if (!out) continue;
    auto in = find_reception_delegation(c, v, k);
    if (!in) continue;
    return DismountStep{v, std::move(*out), std::move(*in)};
  }
  return std::nullopt;
}

Journey lift_journey(const Journey& j, const std::vector<Vertex>& ids) {
  Journey out;
  for (const Hop& h : j.hops) out.hops.push_back({ids[h.from], ids[h.to], h.time});
  return out;
}

std::optional<DismountResult> dismount_fully_detailed(const SimpleClique& c, std::size_t k) {
  DismountResult res;
  std::set<Edge> chosen;
  std::vector<Vertex> ids(c.n());
  std::iota(ids.begin(), ids.end(), Vertex{0});
  SimpleClique cur = c;
  while (cur.n() > 2) {
    auto step = find_dismountable(cur, k);
    if (!step) return std::nullopt;
    DismountStep lifted{ids[step->v], lift_journey(step->out_journey, ids),
                        lift_journey(step->in_journey, ids)};
    for (Edge e : lifted.edges()) chosen.insert(e);
    res.steps.push_back(std::move(lifted));
    ids.erase(ids.begin() + step->v);
    std::vector<Vertex> keep(cur.n());
    std::iota(keep.begin(), keep.end(), Vertex{0});
    keep.erase(keep.begin() + step->v);
    cur = cur.induced(keep);
  }
  if (cur.n() == 2) chosen.emplace(ids[0], ids[1]);
  res.spanner = make_spanner(c.content_hash(), chosen);
  return res;
}

std::optional<Spanner> dismount_fully(const SimpleClique& c, std::size_t k) {
  auto res = dismount_fully_detailed(c, k);
  if (!res) return std::nullopt;
  return std::move(res->spanner);
}

}  // namespace tspan
