#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "io.hpp"

namespace dforge::app {

using io::json;

struct RunOptions {
  int degree = 6;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};

struct CommandResult {
  Report report;
  json data = json::object();
};

CommandResult run_analyze(const json& cfg, const RunOptions& opts);
CommandResult run_verify(const json& cfg, const RunOptions& opts);
CommandResult run_dunkl(const json& cfg, const RunOptions& opts);
CommandResult run_forms(const json& cfg, const RunOptions& opts);

/// Dispatches on "analyze" | "verify" | "dunkl" | "forms".
CommandResult run_command(const std::string& command, const json& cfg, const RunOptions& opts);

/// Full report document for one invocation; inputs are (display name, result).
json document(const std::string& command, const RunOptions& opts,
              const std::vector<std::pair<std::string, CommandResult>>& inputs);

std::string text_report(const std::string& command, const RunOptions& opts,
                        const std::vector<std::pair<std::string, CommandResult>>& inputs);

}  // namespace dforge::app
