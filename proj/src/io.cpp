#include "tspan/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace tspan {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(Errc::kParse, "line " + std::to_string(line) + ": " + why);
}

std::vector<std::string_view> split(std::string_view s, char sep, bool skip_empty) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(sep, start), s.size());
    const std::string_view part = s.substr(start, end - start);
    if (!skip_empty || !part.empty()) out.push_back(part);
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T number(std::string_view s, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    parse_fail(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  bool multi = false;
  std::set<Edge> seen;
  std::vector<std::pair<Edge, std::vector<Label>>> rows;

  for (std::string_view line : split(text, '\n', false)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!have_header) {
      if (tok.size() != 5 || tok[0] != "tg") parse_fail(line_no, "expected header 'tg 1 <n> <m> <simple|multi>'");
      if (tok[1] != "1") parse_fail(line_no, "unsupported format version " + std::string(tok[1]));
      n = number<std::size_t>(tok[2], line_no, "vertex count");
      m = number<std::size_t>(tok[3], line_no, "edge count");
      if (tok[4] != "simple" && tok[4] != "multi") parse_fail(line_no, "kind must be simple or multi");
      multi = tok[4] == "multi";
      if (n < 2) parse_fail(line_no, "need at least 2 vertices");
      if (m != edge_count(n)) {
        parse_fail(line_no, "edge count " + std::to_string(m) + " but K_" + std::to_string(n) +
                                " has " + std::to_string(edge_count(n)));
      }
      have_header = true;
      continue;
    }
    if (tok.size() != 3) parse_fail(line_no, "expected '<u> <v> <labels>'");
    const auto u = number<Vertex>(tok[0], line_no, "vertex");
    const auto v = number<Vertex>(tok[1], line_no, "vertex");
    if (u == v || u >= n || v >= n) parse_fail(line_no, "not an edge of K_" + std::to_string(n));
    const Edge e(u, v);
    if (!seen.insert(e).second) parse_fail(line_no, "edge listed twice");
    std::vector<Label> labels;
    for (std::string_view part : split(tok[2], ',', false)) labels.push_back(number<Label>(part, line_no, "label"));
    if (!multi && labels.size() != 1) parse_fail(line_no, "simple instances carry one label per edge");
    rows.emplace_back(e, std::move(labels));
  }
  if (!have_header) parse_fail(line_no, "missing header");
  if (rows.size() != m) {
    parse_fail(line_no, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(rows.size()));
  }

  if (multi) return MultiLabelClique::build(n, rows);
  std::vector<std::pair<Edge, Label>> simple;
  simple.reserve(rows.size());
  for (const auto& [e, ls] : rows) simple.emplace_back(e, ls.front());
  return SimpleClique::build(n, simple);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write " + path);
  out << content;
}

Instance read_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string format_instance(const SimpleClique& c) {
  std::ostringstream out;
  out << "tg 1 " << c.n() << ' ' << c.size() << " simple\n";
  for (Edge e : c.edges()) out << e.u << ' ' << e.v << ' ' << c.label(e) << '\n';
  return out.str();
}

std::string format_instance(const MultiLabelClique& c) {
  std::ostringstream out;
  out << "tg 1 " << c.n() << ' ' << c.size() << " multi\n";
  for (Edge e : c.edges()) {
    out << e.u << ' ' << e.v << ' ';
    const auto& ls = c.labels(e);
    for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? "," : "") << ls[i];
    out << '\n';
  }
  return out.str();
}

std::string format_instance(const Instance& inst) {
  return std::visit([](const auto& c) { return format_instance(c); }, inst);
}

std::uint64_t instance_hash(const Instance& inst) {
  return std::visit([](const auto& c) { return c.content_hash(); }, inst);
}

std::size_t instance_n(const Instance& inst) {
  return std::visit([](const auto& c) { return c.n(); }, inst);
}

std::string hash_hex(std::uint64_t h) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

std::uint64_t parse_hash_hex(std::string_view s) {
  std::uint64_t h = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), h, 16);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.size() != 16) {
    throw Error(Errc::kParse, "bad instance hash '" + std::string(s) + "'");
  }
  return h;
}

nlohmann::ordered_json spanner_to_json(const Spanner& s, std::string_view algorithm) {
  nlohmann::ordered_json j;
  j["format"] = "tspan-spanner";
  j["version"] = 1;
  j["instance_hash"] = hash_hex(s.instance_hash);
  j["algorithm"] = algorithm;
  j["size"] = s.size();
  auto edges = nlohmann::ordered_json::array();
  for (Edge e : s.edges) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

Spanner spanner_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "tspan-spanner") throw Error(Errc::kParse, "not a spanner document");
    Spanner s;
    s.instance_hash = parse_hash_hex(j.at("instance_hash").get<std::string>());
    std::set<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      const auto u = pair.at(0).get<Vertex>();
      const auto v = pair.at(1).get<Vertex>();
      if (u == v) throw Error(Errc::kParse, "self-loop in spanner");
      edges.emplace(u, v);
    }
    s.edges.assign(edges.begin(), edges.end());
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, std::string("spanner document: ") + e.what());
  }
}

nlohmann::ordered_json label_map_to_json(const LabelMap& m) {
  nlohmann::ordered_json j;
  j["format"] = "tspan-label-map";
  j["version"] = 1;
  j["simple_hash"] = hash_hex(m.simple_hash);
  j["original_hash"] = hash_hex(m.original_hash);
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : m.entries) entries.push_back({e.edge.u, e.edge.v, e.new_label, e.original_label});
  j["entries"] = std::move(entries);
  return j;
}

LabelMap label_map_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "tspan-label-map") throw Error(Errc::kParse, "not a label map document");
    LabelMap m;
    m.simple_hash = parse_hash_hex(j.at("simple_hash").get<std::string>());
    m.original_hash = parse_hash_hex(j.at("original_hash").get<std::string>());
    for (const auto& row : j.at("entries")) {
      m.entries.push_back({Edge(row.at(0).get<Vertex>(), row.at(1).get<Vertex>()),
                           row.at(2).get<Label>(), row.at(3).get<Label>()});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, std::string("label map document: ") + e.what());
  }
}

std::string to_dot(const SimpleClique& c, const Spanner& s, const DotStyle& style) {
  const std::set<Vertex> em(style.emitters.begin(), style.emitters.end());
  const std::set<Vertex> co(style.collectors.begin(), style.collectors.end());
  const std::set<Edge> kept(s.edges.begin(), s.edges.end());
  std::ostringstream out;
  out << "graph spanner {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  for (Vertex v = 0; v < c.n(); ++v) {
    out << "  " << v;
    if (em.contains(v) && co.contains(v)) {
      out << " [style=wedged, fillcolor=\"palegreen:darkgreen\"]";
    } else if (em.contains(v)) {
      out << " [fillcolor=palegreen]";
    } else if (co.contains(v)) {
      out << " [fillcolor=darkgreen, fontcolor=white]";
    }
    out << ";\n";
  }
  for (Edge e : c.edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << c.label(e) << "\", style="
        << (kept.contains(e) ? "bold" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tspan
