#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tkklab/config.hpp"

namespace tkk {

enum ExitCode { exit_pass = 0, exit_check_failed = 1, exit_usage = 2 };

const std::vector<std::string>& command_names();

// Command-line overrides applied on top of the [run] table.
struct CommandOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<unsigned> threads;
  bool large = false;
  std::optional<std::string> out;
  // Negative controls for the relations suite.
  std::optional<std::string> debug_eta;
  bool debug_corrupt = false;
};

void apply_overrides(RunConfig& cfg, const CommandOverrides& o);

// `target` is a config path for every command except polygon, where it is an exported geometry JSON.
int run_command(const std::string& cmd, const std::string& target, const CommandOverrides& o, std::ostream& out, std::ostream& err);

int dispatch(const std::string& cmd, const RunConfig& cfg, const CommandOverrides& o, std::ostream& out, std::ostream& err);

// Verdict line for an exported geometry, e.g. "generalized hexagon: girth 12, diameter 6".
int polygon_command(const std::string& json_path, unsigned threads, std::ostream& out, std::ostream& err);

}  // namespace tkk
