#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperslice/config.hpp"

namespace hyperslice {

/// CLI exit codes.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitFailed = 4 };

using Details = std::vector<std::pair<std::string, double>>;
using Cell = std::variant<std::string, double, std::int64_t, bool, std::vector<double>, Details>;

/// Output of one command: fixed columns, rows in deterministic order.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool all_passed = true;
};

struct CommandOptions {
  std::optional<OutputFormat> format;
  std::optional<std::uint64_t> seed;
  bool mc = false;
};

/// measure | section | max-section | verify-hyperplane | verify-stability |
/// verify-difference | verify-volume-stability | lemmas | sweep
const std::vector<std::string>& command_names();

/// Columns shared by every inequality report table. The first nine are the
/// documented stable CSV layout; `details` carries named intermediates.
const std::vector<std::string>& report_columns();

/// Throws ConfigError or NumericalError.
Table run_command(const std::string& name, const RunConfig& config, const CommandOptions& options);

void write_table(const Table& table, OutputFormat format, std::ostream& out);

/// Runs a command and writes the table; maps exceptions to exit codes and
/// writes diagnostics to `err`.
int execute(const std::string& name, const RunConfig& config, const CommandOptions& options, std::ostream& out,
            std::ostream& err);

}  // namespace hyperslice
