#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace minkowski::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (args[0] is the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A named command with exactly one ball source and an optional expected
/// outcome, matched as a JSON subset against the command's output.
struct Scenario {
  std::string name;
  std::string ball_flag;   // "--ball", "--hanner" or "--rhombic"
  std::string ball_value;
  std::string operation;   // a command name
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json expected;  // null when absent
  int expected_exit = 0;
};

Scenario scenario_from_json(const nlohmann::json& j, const std::string& base_dir);
std::vector<std::string> scenario_argv(const Scenario& s);

struct ScenarioOutcome {
  int exit_code = 0;
  nlohmann::json output;
  bool matches = false;
};

ScenarioOutcome run_scenario(const Scenario& s);

/// True iff every key of `expected` is present in `actual` with an equal
/// value (recursively for objects; arrays compare element-wise).
bool json_subset(const nlohmann::json& expected, const nlohmann::json& actual);

}  // namespace minkowski::cli
