#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tspan/core.hpp"
#include "tspan/io.hpp"
#include "tspan/reach.hpp"

namespace tspan {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;      // verify: spanner not temporally connected
inline constexpr int kExitBadInput = 2;     // parse, validation or usage error
inline constexpr int kExitSelfCheck = 3;    // span produced a spanner that does not verify
inline constexpr int kExitNoSpanner = 4;    // pivot/dismount found nothing to build on

struct AlgorithmRun {
  Spanner spanner;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  DotStyle style;
};

const std::vector<std::string>& algorithm_names();

// Runs one spanner construction on a simple clique. Returns nothing when the
// algorithm does not apply (no pivot, not fully dismountable).
std::optional<AlgorithmRun> run_algorithm(std::string_view algo, const SimpleClique& c,
                                          std::size_t k = 1);

// The size guarantee each algorithm is checked against.
std::size_t algorithm_bound(std::string_view algo, std::size_t n, std::size_t k = 1);

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspan
