#pragma once

// Command layer behind the `cabling` executable. Commands produce a
// CommandResult; JSON is the contract and the text form is rendered from it.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cabling::cli {

struct WitnessRecord {
  std::string A, N;
  std::vector<std::string> assignment;
  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct CommandResult {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // in flag order
  std::vector<std::string> set;                             // slope sets in text form
  std::vector<std::string> labels;                          // parallel to `set` when present
  std::optional<std::string> exactness;
  std::optional<bool> flag;
  std::optional<WitnessRecord> witness;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::string> refs;  // names of the rules that produced the result

  friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

std::string to_json(const CommandResult& result);
CommandResult from_json(const std::string& text);
std::string to_text(const CommandResult& result);

// Raw flag values; absent flags stay empty.
struct CommandArgs {
  std::optional<std::string> p, q, b, J, gamma, tau, input, mode, direction;
  long max_denominator = 24;
};

CommandResult run_command(const std::string& name, const CommandArgs& args);

enum ExitCode { kOk = 0, kUsage = 2, kDomain = 3, kOracleMismatch = 4 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cabling::cli
