#ifndef HFORGE_TOOLS_CLI_HPP
#define HFORGE_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hforge::tools
{

enum class Format
{
  table,
  json
};

// Everything that determines a command's machine-readable output.
struct RunConfig
{
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0u;
  std::uint64_t budget = 1000000u;
  std::string out;
  Format format = Format::table;

  unsigned genus = 0u;
  unsigned degree = 0u;
  std::vector<unsigned> poles;
  std::optional<std::size_t> keep;
  bool with_k1 = false;
  std::size_t min_degree = 5u;
  std::size_t max_degree = 12u;
  std::uint64_t trials = 0u;
  std::string tuple_out;
};

inline constexpr int exit_success = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

struct CommandOutcome
{
  nlohmann::ordered_json result;
  int exit_code = exit_success;
  // plain-text rendering overriding the generic one, if any
  std::optional<std::string> text;
};

// Runs one parsed command; `threads` only affects speed.
CommandOutcome run_command(RunConfig const &config, unsigned threads);

// {"tool", "version", "command", "seed", "budget", "parameters"}
nlohmann::ordered_json report_header(RunConfig const &config);

// Full command line without the program name. Reads HURWITZ_FORGE_THREADS.
// Returns the process exit code.
int run_cli(std::vector<std::string> const &args, std::ostream &out,
            std::ostream &err);

} // namespace hforge::tools

#endif // HFORGE_TOOLS_CLI_HPP
