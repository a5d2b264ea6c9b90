#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "topobound/graph.hpp"
#include "topobound/set_system.hpp"

namespace topobound::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_verdict_failed = 1,
  exit_resource = 2,
  exit_input = 3,
};

/// A loaded instance: the graph and, for Kneser-type inputs, its set system.
struct Instance {
  std::string name;
  Graph graph;
  std::optional<SetSystem> system;
};

/// Parses the leading tokens of `tokens` as an instance spec
///   complete m | cycle n | kneser n k | schrijver n k |
///   random n p [seed] | file path
/// and returns how many tokens were consumed. `seed` is used when a random
/// spec has no seed of its own. Throws InvalidArgument.
Instance load_instance(const std::vector<std::string>& tokens, std::uint64_t seed,
                       std::size_t* consumed = nullptr);

/// Runs the tool with argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topobound::cli
