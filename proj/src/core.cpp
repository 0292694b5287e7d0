#include "tspan/core.hpp"

#include <algorithm>
#include <string>

namespace tspan {

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

void check_vertex_pair(std::size_t n, Edge e) {
  if (e.u == e.v || e.v >= n) {
    throw Error(Errc::kVertexOutOfRange,
                "edge " + edge_str(e) + " is not an edge of K_" + std::to_string(n));
  }
}

void check_label(Label l) {
  if (l == kNegInf || l == kPosInf) {
    throw Error(Errc::kLabelOutOfRange, "label " + std::to_string(l) + " is reserved");
  }
}

class Fnv1a {
 public:
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (x >> (8 * i)) & 0xffU;
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kMissingEdge: return "MissingEdge";
    case Errc::kDuplicateEdge: return "DuplicateEdge";
    case Errc::kLocalLabelCollision: return "LocalLabelCollision";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kEmptyLabelSet: return "EmptyLabelSet";
    case Errc::kLabelOutOfRange: return "LabelOutOfRange";
    case Errc::kRankOutOfBounds: return "RankOutOfBounds";
    case Errc::kInstanceMismatch: return "InstanceMismatch";
    case Errc::kMapMismatch: return "MapMismatch";
    case Errc::kInvalidCertificate: return "InvalidCertificate";
    case Errc::kMalformedArcSet: return "MalformedArcSet";
    case Errc::kIsSink: return "IsSink";
    case Errc::kInconsistentFireworks: return "InconsistentFireworks";
    case Errc::kSplitStalled: return "SplitStalled";
    case Errc::kInstanceTooLarge: return "InstanceTooLarge";
    case Errc::kNTooSmall: return "NTooSmall";
    case Errc::kUnknownFixture: return "UnknownFixture";
    case Errc::kParse: return "ParseError";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

std::size_t edge_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t edge_index(std::size_t n, Edge e) {
  const std::size_t u = e.u;
  return u * n - u * (u + 1) / 2 + (e.v - u - 1);
}

Edge edge_at(std::size_t n, std::size_t index) {
  Vertex u = 0;
  while (index >= n - 1 - u) {
    index -= n - 1 - u;
    ++u;
  }
  return Edge(u, static_cast<Vertex>(u + 1 + index));
}

std::vector<Edge> all_edges(std::size_t n) {
  std::vector<Edge> out;
  out.reserve(edge_count(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

SimpleClique SimpleClique::build(std::size_t n,
                                 std::span<const std::pair<Edge, Label>> labels) {
  const std::size_t m = edge_count(n);
  std::vector<Label> table(m);
  std::vector<bool> seen(m, false);
  for (const auto& [e, l] : labels) {
    check_vertex_pair(n, e);
    check_label(l);
    const std::size_t idx = edge_index(n, e);
    if (seen[idx]) throw Error(Errc::kDuplicateEdge, "edge " + edge_str(e) + " given twice");
    seen[idx] = true;
    table[idx] = l;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!seen[i]) throw Error(Errc::kMissingEdge, "edge " + edge_str(edge_at(n, i)) + " has no label");
  }
  return from_labels(n, std::move(table));
}

SimpleClique SimpleClique::from_labels(std::size_t n, std::vector<Label> labels) {
  if (labels.size() != edge_count(n)) {
    throw Error(labels.size() < edge_count(n) ? Errc::kMissingEdge : Errc::kDuplicateEdge,
                "expected " + std::to_string(edge_count(n)) + " labels, got " +
                    std::to_string(labels.size()));
  }
  SimpleClique c;
  c.n_ = n;
  c.labels_ = std::move(labels);
  std::vector<std::pair<Label, Vertex>> around;
  for (Vertex w = 0; w < n; ++w) {
    around.clear();
    for (Vertex x = 0; x < n; ++x) {
      if (x == w) continue;
      const Label l = c.label(w, x);
      check_label(l);
      around.emplace_back(l, x);
    }
    std::sort(around.begin(), around.end());
    for (std::size_t i = 1; i < around.size(); ++i) {
      if (around[i].first == around[i - 1].first) {
        throw Error(Errc::kLocalLabelCollision,
                    "vertex " + std::to_string(w) + ": edges " +
                        edge_str(Edge(w, around[i - 1].second)) + " and " +
                        edge_str(Edge(w, around[i].second)) + " share label " +
                        std::to_string(around[i].first));
      }
    }
  }
  return c;
}

Edge SimpleClique::extreme_edge(Vertex v, Side side) const {
  Vertex best = v == 0 ? 1 : 0;
  for (Vertex x = 0; x < n_; ++x) {
    if (x == v) continue;
    const Label l = label(v, x);
    const Label b = label(v, best);
    if (side == Side::kMin ? l < b : l > b) best = x;
  }
  return Edge(v, best);
}

SimpleClique SimpleClique::negated() const {
  SimpleClique c = *this;
  for (Label& l : c.labels_) l = -l;
  return c;
}

SimpleClique SimpleClique::induced(std::span<const Vertex> keep) const {
  SimpleClique c;
  c.n_ = keep.size();
  c.labels_.reserve(edge_count(c.n_));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) c.labels_.push_back(label(keep[i], keep[j]));
  }
  return c;
}

std::uint64_t SimpleClique::content_hash() const {
  Fnv1a h;
  h.add(1);
  h.add(n_);
  for (Label l : labels_) {
    h.add(1);
    h.add(static_cast<std::uint64_t>(l));
  }
  return h.value();
}

MultiLabelClique MultiLabelClique::build(
    std::size_t n, std::span<const std::pair<Edge, std::vector<Label>>> labels) {
  const std::size_t m = edge_count(n);
  MultiLabelClique c;
  c.n_ = n;
  c.labels_.assign(m, {});
  std::vector<bool> seen(m, false);
  for (const auto& [e, ls] : labels) {
    check_vertex_pair(n, e);
    const std::size_t idx = edge_index(n, e);
    if (seen[idx]) throw Error(Errc::kDuplicateEdge, "edge " + edge_str(e) + " given twice");
    if (ls.empty()) throw Error(Errc::kEmptyLabelSet, "edge " + edge_str(e) + " has no labels");
    seen[idx] = true;
    auto& dst = c.labels_[idx];
    dst = ls;
    for (Label l : dst) check_label(l);
    std::sort(dst.begin(), dst.end());
    dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!seen[i]) throw Error(Errc::kMissingEdge, "edge " + edge_str(edge_at(n, i)) + " has no label");
  }
  return c;
}

std::uint64_t MultiLabelClique::content_hash() const {
  // A multi-label clique whose sets are all singletons hashes differently from
  // the simple clique with the same labels: the kind tag differs.
  Fnv1a h;
  h.add(2);
  h.add(n_);
  for (const auto& ls : labels_) {
    h.add(ls.size());
    for (Label l : ls) h.add(static_cast<std::uint64_t>(l));
  }
  return h.value();
}

RankTable::RankTable(const SimpleClique& c, std::span<const Edge> universe) : sorted_(c.n()) {
  for (Edge e : universe) {
    sorted_[e.u].push_back(e);
    sorted_[e.v].push_back(e);
  }
  for (auto& list : sorted_) {
    std::sort(list.begin(), list.end(),
              [&](Edge a, Edge b) { return c.label(a) < c.label(b); });
  }
}

Edge RankTable::rank_edge(Vertex v, std::size_t i) const {
  if (v >= sorted_.size() || i < 1 || i > sorted_[v].size()) {
    throw Error(Errc::kRankOutOfBounds,
                "rank " + std::to_string(i) + " at vertex " + std::to_string(v));
  }
  return sorted_[v][i - 1];
}

std::size_t RankTable::rank_of(Vertex v, Edge e) const {
  const auto& list = sorted_[v];
  const auto it = std::find(list.begin(), list.end(), e);
  return it == list.end() ? 0 : static_cast<std::size_t>(it - list.begin()) + 1;
}

}  // namespace tspan
