// hyperslice: measures of symmetric convex bodies, their central sections,
// and numerical checks of slicing inequalities.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperslice/commands.hpp"

using namespace hyperslice;

int main(int argc, char** argv) {
  CLI::App app{"Measures of origin-symmetric convex bodies and their central hyperplane sections"};
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
  bool mc = false;

  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_path, "Output file (default: config 'output', else stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for Monte Carlo and random lemma instances");
  app.add_flag("--mc", mc, "Add Monte Carlo cross-check columns (measure, section)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  CommandOptions options;
  options.mc = mc;
  if (!format.empty()) options.format = parse_format(format);
  if (*seed_opt) options.seed = seed;

  const std::string target = out_path.empty() ? config.output_path : out_path;
  if (target.empty()) return execute(command, config, options, std::cout, std::cerr);

  std::ostringstream buffer;
  const int rc = execute(command, config, options, buffer, std::cerr);
  if (rc == kExitConfig || rc == kExitNumerical) return rc;
  std::ofstream out(target);
  if (!out) {
    std::cerr << "cannot write '" << target << "'\n";
    return kExitConfig;
  }
  out << buffer.str();
  return rc;
}
