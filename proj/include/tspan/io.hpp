#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tspan/core.hpp"
#include "tspan/reach.hpp"
#include "tspan/reduce.hpp"

namespace tspan {

// Text format:
//   tg 1 <n> <m> <simple|multi>
//   <u> <v> <l1>[,<l2>,...]      one line per edge, m = C(n,2) lines
// Blank lines and lines starting with '#' are ignored.
using Instance = std::variant<SimpleClique, MultiLabelClique>;

Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);

std::string format_instance(const SimpleClique& c);
std::string format_instance(const MultiLabelClique& c);
std::string format_instance(const Instance& inst);

std::uint64_t instance_hash(const Instance& inst);
std::size_t instance_n(const Instance& inst);

std::string hash_hex(std::uint64_t h);
std::uint64_t parse_hash_hex(std::string_view s);

nlohmann::ordered_json spanner_to_json(const Spanner& s, std::string_view algorithm);
Spanner spanner_from_json(const nlohmann::json& j);

nlohmann::ordered_json label_map_to_json(const LabelMap& m);
LabelMap label_map_from_json(const nlohmann::json& j);

struct DotStyle {
  std::vector<Vertex> emitters;
  std::vector<Vertex> collectors;
};

// Spanner edges bold, the other edges dashed; emitters light, collectors dark.
std::string to_dot(const SimpleClique& c, const Spanner& s, const DotStyle& style);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace tspan
