#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace betabranch::cli {

enum class Format { Text, Json, Csv, Dot };

/// One parsed invocation.
struct RunConfig {
  std::string command;
  std::vector<std::string> bases;   // one per invocation, several for sweep
  std::vector<std::string> points;  // at most one per invocation, several for sweep
  std::string mode;                 // expand: greedy|lazy|all, tree: full|infinite|continuum
  std::optional<std::size_t> digits;
  std::size_t depth = 6;
  std::size_t max_states = 0;  // 0 selects default_max_states()
  std::size_t max_steps = 10000;
  std::size_t k_max = 10;
  std::optional<Format> format;
  std::string out;
  std::string item;
  bool all = false;
};

namespace exit_status {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int unknown = 3;
}  // namespace exit_status

/// Runs a parsed configuration. Output goes to `out` (or the --out file), diagnostics to `err`.
/// Returns 0 for definite answers, 3 when the answer is Unknown and 2 for input errors.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without the program name) and executes them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betabranch::cli
