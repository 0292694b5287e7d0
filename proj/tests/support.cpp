#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tspan::testing {

Edge E(std::string_view name) {
  if (name.size() != 2) throw std::invalid_argument("edge names have two letters");
  return Edge(static_cast<Vertex>(name[0] - 'a'), static_cast<Vertex>(name[1] - 'a'));
}

std::set<Edge> edges_of(std::string_view names) {
  std::set<Edge> out;
  std::istringstream in{std::string(names)};
  std::string tok;
  while (in >> tok) out.insert(E(tok));
  return out;
}

SimpleClique lettered(std::size_t n, std::string_view spec) {
  std::vector<std::pair<Edge, Label>> entries;
  std::istringstream in{std::string(spec)};
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.find(':');
    entries.emplace_back(E(tok.substr(0, colon)), std::stol(tok.substr(colon + 1)));
  }
  return SimpleClique::build(n, entries);
}

namespace {

using Options = std::vector<std::vector<std::pair<Vertex, Label>>>;

BruteReach explore(std::size_t n, const Options& adj, Vertex source, Mode mode, Label min_start) {
  BruteReach r;
  r.reached.assign(n, false);
  r.earliest.assign(n, kPosInf);
  r.reached[source] = true;
  r.earliest[source] = kNegInf;
  std::vector<bool> on_path(n, false);
  std::function<void(Vertex, Label)> dfs = [&](Vertex x, Label last) {
    on_path[x] = true;
    for (const auto& [y, t] : adj[x]) {
      if (on_path[y] || t < min_start) continue;
      const bool ok = mode == Mode::kStrict ? last < t : last <= t;
      if (!ok) continue;
      r.reached[y] = true;
      r.earliest[y] = std::min(r.earliest[y], t);
      dfs(y, t);
    }
    on_path[x] = false;
  };
  dfs(source, kNegInf);
  return r;
}

}  // namespace

BruteReach brute_from(const SimpleClique& c, Vertex source, Mode mode,
                      const std::vector<Edge>& universe, Label min_start) {
  Options adj(c.n());
  for (Edge e : universe) {
    adj[e.u].emplace_back(e.v, c.label(e));
    adj[e.v].emplace_back(e.u, c.label(e));
  }
  return explore(c.n(), adj, source, mode, min_start);
}

BruteReach brute_from(const MultiLabelClique& c, Vertex source, Mode mode,
                      const std::vector<Edge>& universe) {
  Options adj(c.n());
  for (Edge e : universe) {
    for (Label l : c.labels(e)) {
      adj[e.u].emplace_back(e.v, l);
      adj[e.v].emplace_back(e.u, l);
    }
  }
  return explore(c.n(), adj, source, mode, kNegInf);
}

std::vector<Label> brute_latest_departure(const SimpleClique& c, Vertex target, Mode mode,
                                          const std::vector<Edge>& universe, Label max_end) {
  std::vector<Label> best(c.n(), kNegInf);
  best[target] = kPosInf;
  Options adj(c.n());
  for (Edge e : universe) {
    if (c.label(e) > max_end) continue;
    adj[e.u].emplace_back(e.v, c.label(e));
    adj[e.v].emplace_back(e.u, c.label(e));
  }
  for (Vertex s = 0; s < c.n(); ++s) {
    if (s == target) continue;
    std::vector<bool> on_path(c.n(), false);
    std::function<void(Vertex, Label, Label)> dfs = [&](Vertex x, Label first, Label last) {
      if (x == target) {
        best[s] = std::max(best[s], first);
        return;
      }
      on_path[x] = true;
      for (const auto& [y, t] : adj[x]) {
        if (on_path[y]) continue;
        const bool ok = mode == Mode::kStrict ? last < t : last <= t;
        if (ok) dfs(y, first == kNegInf ? t : first, t);
      }
      on_path[x] = false;
    };
    dfs(s, kNegInf, kNegInf);
  }
  return best;
}

bool brute_connected(const SimpleClique& c, Mode mode, const std::vector<Edge>& universe) {
  for (Vertex s = 0; s < c.n(); ++s) {
    const BruteReach r = brute_from(c, s, mode, universe);
    if (std::find(r.reached.begin(), r.reached.end(), false) != r.reached.end()) return false;
  }
  return true;
}

std::vector<std::vector<Edge>> all_strict_journeys(const SimpleClique& c) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> path;
  std::vector<bool> on_path(c.n(), false);
  std::function<void(Vertex, Label)> dfs = [&](Vertex x, Label last) {
    on_path[x] = true;
    for (Vertex y = 0; y < c.n(); ++y) {
      if (on_path[y] || c.label(x, y) <= last) continue;
      path.emplace_back(x, y);
      out.push_back(path);
      dfs(y, c.label(x, y));
      path.pop_back();
    }
    on_path[x] = false;
  };
  for (Vertex s = 0; s < c.n(); ++s) dfs(s, kNegInf);
  return out;
}

bool one_hop_dismountable(const SimpleClique& c, Vertex v) {
  bool out = false;
  bool in = false;
  for (Vertex x = 0; x < c.n(); ++x) {
    if (x == v) continue;
    Label lo = kPosInf;
    Label hi = kNegInf;
    for (Vertex y = 0; y < c.n(); ++y) {
      if (y == x) continue;
      lo = std::min(lo, c.label(x, y));
      hi = std::max(hi, c.label(x, y));
    }
    out |= c.label(v, x) == lo;
    in |= c.label(v, x) == hi;
  }
  return out && in;
}

std::vector<Edge> to_vector(const std::set<Edge>& s) { return {s.begin(), s.end()}; }

}  // namespace tspan::testing
