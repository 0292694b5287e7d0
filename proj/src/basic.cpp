#include "tspan/basic.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tspan {

std::optional<PivotCertificate> find_pivot(const SimpleClique& c) {
  const std::size_t n = c.n();
  const std::vector<Contact> all = contacts_of(c, c.edges());

  // t_in[p] = latest earliest-arrival at p over all other sources.
  std::vector<Label> t_in(n, kNegInf);
  for (Vertex u = 0; u < n; ++u) {
    const ReachTree from_u = earliest_arrival_tree(n, all, u, Mode::kStrict);
    for (Vertex p = 0; p < n; ++p) {
      if (p != u) t_in[p] = std::max(t_in[p], from_u.time[p]);
    }
  }

  for (Vertex p = 0; p < n; ++p) {
    if (t_in[p] == kPosInf) continue;
    const ReachTree out = earliest_arrival_tree(n, all, p, Mode::kStrict, t_in[p] + 1);
    if (!out.spans_all()) continue;
    const ReachTree in = latest_departure_tree(n, all, p, Mode::kStrict, t_in[p]);
    return PivotCertificate{p, t_in[p], in.tree_edges(), out.tree_edges()};
  }
  return std::nullopt;
}

Spanner pivot_spanner(const SimpleClique& c, const PivotCertificate& cert) {
  const std::size_t n = c.n();
  auto reject = [](const std::string& why) { throw Error(Errc::kInvalidCertificate, why); };
  if (cert.p >= n) reject("pivot vertex out of range");

  std::set<Edge> chosen(cert.in_tree.begin(), cert.in_tree.end());
  chosen.insert(cert.out_tree.begin(), cert.out_tree.end());
  if (chosen.size() > 2 * (n - 1)) reject("more than 2(n-1) edges");

  const auto in = latest_departure_tree(n, contacts_of(c, cert.in_tree), cert.p, Mode::kStrict, cert.t);
  if (!in.spans_all()) reject("some vertex cannot reach the pivot by time " + std::to_string(cert.t));
  const auto out =
      earliest_arrival_tree(n, contacts_of(c, cert.out_tree), cert.p, Mode::kStrict, cert.t + 1);
  if (!out.spans_all()) reject("the pivot cannot reach every vertex after time " + std::to_string(cert.t));

  return make_spanner(c.content_hash(), chosen);
}

namespace {

std::vector<std::vector<Vertex>> pack_quadruples(std::size_t n) {
  std::vector<bool> used(edge_count(n), false);
  auto is_used = [&](Vertex a, Vertex b) { return used[edge_index(n, Edge(a, b))]; };
  std::vector<std::vector<Vertex>> quads;
  auto take = [&](std::vector<Vertex> q) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) used[edge_index(n, Edge(q[i], q[j]))] = true;
    }
    quads.push_back(std::move(q));
  };

  for (Vertex b = 0; b + 4 <= n; b += 4) take({b, b + 1, b + 2, b + 3});
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (is_used(a, b)) continue;
      for (Vertex x = b + 1; x < n; ++x) {
        if (is_used(a, b) || is_used(a, x) || is_used(b, x)) continue;
        for (Vertex y = x + 1; y < n; ++y) {
          if (is_used(a, b) || is_used(a, x) || is_used(b, x)) break;
          if (is_used(a, y) || is_used(b, y) || is_used(x, y)) continue;
          take({a, b, x, y});
        }
      }
    }
  }
  return quads;
}

}  // namespace

K4Result k4_sparsify_detailed(const SimpleClique& c) {
  const std::size_t n = c.n();
  if (n < 4) throw Error(Errc::kInvalidArgument, "k4_sparsify needs n >= 4");

  K4Result res;
  res.packed = pack_quadruples(n);
  const std::vector<Edge> edges = c.edges();
  std::vector<bool> gone(edges.size(), false);
  auto remaining_without = [&](std::optional<Edge> extra) {
    std::vector<Edge> keep;
    for (std::size_t i = 0; i < gone.size(); ++i) {
      if (!gone[i] && edges[i] != extra) keep.push_back(edges[i]);
    }
    return keep;
  };

  for (const auto& quad : res.packed) {
    const SimpleClique local = c.induced(quad);
    for (Edge le : local.edges()) {
      std::vector<Edge> inside = local.edges();
      std::erase(inside, le);
      if (!is_temporally_connected(local, Mode::kStrict, inside)) continue;
      const Edge ge(quad[le.u], quad[le.v]);
      if (!is_temporally_connected(c, Mode::kStrict, remaining_without(ge))) continue;
      gone[edge_index(n, ge)] = true;
      res.removed.push_back(ge);
      break;
    }
  }

  const std::vector<Edge> kept = remaining_without(std::nullopt);
  res.spanner = make_spanner(c.content_hash(), std::set<Edge>(kept.begin(), kept.end()));
  return res;
}

Spanner k4_sparsify(const SimpleClique& c) { return k4_sparsify_detailed(c).spanner; }

}  // namespace tspan
