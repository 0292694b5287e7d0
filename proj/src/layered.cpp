#include "tspan/layered.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace tspan {

namespace {

std::size_t ceil_log2(std::size_t k) { return k <= 1 ? 0 : std::bit_width(k - 1); }

std::size_t pow2_below(std::size_t a) { return std::bit_floor(a - 1); }

bool in_interval(std::size_t rank, RankInterval iv) { return rank >= iv.lo && rank <= iv.hi; }

}  // namespace

BipartiteResidual BipartiteResidual::build(std::vector<Vertex> emitters,
                                           std::vector<Vertex> collectors,
                                           std::vector<Label> labels) {
  const std::size_t k = emitters.size();
  if (k == 0 || collectors.size() != k || labels.size() != k * k) {
    throw Error(Errc::kInconsistentFireworks,
                "residual needs k emitters, k collectors and k*k labels");
  }
  BipartiteResidual r;
  r.emitters_ = std::move(emitters);
  r.collectors_ = std::move(collectors);
  r.labels_ = std::move(labels);
  r.rank_.assign(k * k, 0);
  r.order_.assign(k * k, 0);
  r.s_minus_.assign(k, 0);
  r.s_plus_.assign(k, 0);

  for (std::size_t e = 0; e < k; ++e) {
    auto row = r.order_.begin() + static_cast<std::ptrdiff_t>(e * k);
    std::iota(row, row + static_cast<std::ptrdiff_t>(k), std::size_t{0});
    std::sort(row, row + static_cast<std::ptrdiff_t>(k),
              [&](std::size_t a, std::size_t b) { return r.label(e, a) < r.label(e, b); });
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0 && r.label(e, row[i]) == r.label(e, row[i - 1])) {
        throw Error(Errc::kInconsistentFireworks,
                    "emitter " + std::to_string(r.emitters_[e]) + " has two edges with one label");
      }
      r.rank_[e * k + row[i]] = i + 1;
    }
    r.s_minus_[e] = row[0];
    r.s_plus_[e] = row[k - 1];
  }

  for (std::size_t c = 0; c < k; ++c) {
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t e = 1; e < k; ++e) {
      if (r.label(e, c) == r.label(lo, c)) {
        throw Error(Errc::kInconsistentFireworks,
                    "collector " + std::to_string(r.collectors_[c]) + " has two edges with one label");
      }
      if (r.label(e, c) < r.label(lo, c)) lo = e;
      if (r.label(e, c) > r.label(hi, c)) hi = e;
    }
    for (std::size_t e = 0; e < k; ++e) {
      if (r.s_minus_[e] == c && e != lo) {
        throw Error(Errc::kInconsistentFireworks,
                    "minimum edge of emitter " + std::to_string(r.emitters_[e]) +
                        " is not minimum at its collector");
      }
      if (r.s_plus_[e] == c && e != hi) {
        throw Error(Errc::kInconsistentFireworks,
                    "maximum edge of emitter " + std::to_string(r.emitters_[e]) +
                        " is not maximum at its collector");
      }
    }
  }
  return r;
}

std::set<Edge> BipartiteResidual::matching_edges() const {
  std::set<Edge> out;
  for (std::size_t e = 0; e < k(); ++e) {
    out.insert(host_edge(e, s_minus_[e]));
    out.insert(host_edge(e, s_plus_[e]));
  }
  return out;
}

std::set<Edge> BipartiteResidual::all_edges() const {
  std::set<Edge> out;
  for (std::size_t e = 0; e < k(); ++e) {
    for (std::size_t c = 0; c < k(); ++c) out.insert(host_edge(e, c));
  }
  return out;
}

SimpleClique BipartiteResidual::as_clique() const {
  const std::size_t n = 2 * k();
  const Label top = *std::max_element(labels_.begin(), labels_.end());
  std::vector<Label> table(edge_count(n));
  Label next = top + 1;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Edge e = edge_at(n, i);
    const bool crossing = e.u < k() && e.v >= k();
    table[i] = crossing ? label(e.u, e.v - k()) : next++;
  }
  return SimpleClique::from_labels(n, std::move(table));
}

Edge BipartiteResidual::local_edge(Edge host) const {
  auto local = [&](Vertex w) -> Vertex {
    const auto ei = std::find(emitters_.begin(), emitters_.end(), w);
    if (ei != emitters_.end()) return static_cast<Vertex>(ei - emitters_.begin());
    const auto ci = std::find(collectors_.begin(), collectors_.end(), w);
    if (ci == collectors_.end()) {
      throw Error(Errc::kInvalidArgument, "vertex " + std::to_string(w) + " not in residual");
    }
    return static_cast<Vertex>(k() + static_cast<std::size_t>(ci - collectors_.begin()));
  };
  return Edge(local(host.u), local(host.v));
}

std::vector<RankInterval> rank_intervals(std::size_t k) {
  std::vector<RankInterval> out;
  if (k <= 8) return out;
  const std::size_t steps = ceil_log2(k) - 3;
  for (std::size_t j = 1; j <= steps; ++j) {
    const std::size_t lo = (std::size_t{1} << (j + 2)) - 7;
    const std::size_t hi = (std::size_t{1} << (j + 3)) - 8;
    if (lo > k) break;
    out.push_back({lo, std::min(hi, k)});
  }
  return out;
}

std::vector<DelegationStep> delegation_schedule(std::size_t k) {
  std::vector<DelegationStep> out;
  std::size_t alive = k;
  std::size_t lo = 1;
  while (alive > 8) {
    const std::size_t size = (8 * k + alive - 1) / alive;
    const std::size_t hi = std::min(lo + size - 1, k);
    if (lo > hi) throw Error(Errc::kSplitStalled, "rank budget exhausted for k=" + std::to_string(k));
    const std::size_t next = pow2_below(alive);
    out.push_back({{lo, hi}, alive, next});
    lo = hi + 1;
    alive = next;
  }
  return out;
}

SplitResult split_alive(const BipartiteResidual& r, const std::vector<std::size_t>& alive,
                        RankInterval interval, std::size_t target_survivors) {
  if (target_survivors >= alive.size()) {
    throw Error(Errc::kInvalidArgument, "split target must be below the alive count");
  }
  const std::size_t k = r.k();
  const std::size_t need = alive.size() - target_survivors;
  std::vector<char> open(k, 0);
  for (std::size_t e : alive) open[e] = 1;

  SplitResult out;
  while (out.eliminated.size() < need) {
    std::vector<std::size_t> degree(k, 0);
    for (std::size_t e : alive) {
      if (!open[e]) continue;
      for (std::size_t i = interval.lo; i <= interval.hi; ++i) ++degree[r.at_rank(e, i)];
    }
    const std::size_t c = static_cast<std::size_t>(
        std::max_element(degree.begin(), degree.end()) - degree.begin());
    if (degree[c] < 2) {
      throw Error(Errc::kSplitStalled, "no collector of degree 2 with " +
                                           std::to_string(need - out.eliminated.size()) +
                                           " eliminations outstanding");
    }
    std::vector<std::size_t> batch;
    for (std::size_t e : alive) {
      if (open[e] && in_interval(r.rank(e, c), interval)) batch.push_back(e);
    }
    const std::size_t delegate = *std::max_element(
        batch.begin(), batch.end(),
        [&](std::size_t a, std::size_t b) { return r.label(a, c) < r.label(b, c); });
    open[delegate] = 0;
    for (std::size_t e : batch) {
      if (e == delegate || out.eliminated.size() == need) continue;
      out.eliminated.push_back({e, c, delegate});
      open[e] = 0;
    }
  }

  std::vector<char> gone(k, 0);
  for (const Delegation& d : out.eliminated) gone[d.emitter] = 1;
  for (std::size_t e : alive) {
    if (!gone[e]) out.survivors.push_back(e);
  }
  std::sort(out.survivors.begin(), out.survivors.end());
  return out;
}

LayeredSelection layered_delegation_detailed(const BipartiteResidual& r) {
  LayeredSelection sel;
  std::vector<std::size_t> alive(r.k());
  std::iota(alive.begin(), alive.end(), std::size_t{0});

  std::size_t j = 0;
  for (const DelegationStep& plan : delegation_schedule(r.k())) {
    StepSelection step;
    step.j = ++j;
    step.interval = plan.interval;
    step.split = split_alive(r, alive, plan.interval, plan.alive_after);
    for (const Delegation& d : step.split.eliminated) {
      step.journey_edges.insert(r.host_edge(d.emitter, d.collector));
      step.journey_edges.insert(r.host_edge(d.delegate, d.collector));
      // Collectors the delegate sees before the journey arrives are missed
      // and must be reached directly.
      const std::size_t arrival_rank = r.rank(d.delegate, d.collector);
      for (std::size_t i = 1; i < arrival_rank; ++i) {
        step.direct_edges.insert(r.host_edge(d.emitter, r.at_rank(d.delegate, i)));
      }
      step.cost.push_back(2 + (arrival_rank - 1));
    }
    alive = step.split.survivors;
    sel.edges.insert(step.journey_edges.begin(), step.journey_edges.end());
    sel.edges.insert(step.direct_edges.begin(), step.direct_edges.end());
    sel.steps.push_back(std::move(step));
  }

  sel.finalists = alive;
  for (std::size_t e : alive) {
    for (std::size_t c = 0; c < r.k(); ++c) sel.last_edges.insert(r.host_edge(e, c));
  }
  sel.edges.insert(sel.last_edges.begin(), sel.last_edges.end());
  const std::set<Edge> matchings = r.matching_edges();
  sel.edges.insert(matchings.begin(), matchings.end());
  return sel;
}

std::set<Edge> layered_delegation(const BipartiteResidual& r) {
  return layered_delegation_detailed(r).edges;
}

}  // namespace tspan
