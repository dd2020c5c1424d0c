// varbesov run --config PATH [--suite NAME]... [--seed U64] [--trials N]
//              [--out PATH] [--format json|csv] [--plot PATH]
//
// Exit status: 0 all checks passed, 1 a check failed, 2 bad config or usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "varbesov/suite.hpp"

namespace {

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "varbesov: cannot write '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variable-exponent Lebesgue/Besov norm toolkit and verification runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string out_path = "-";
  std::string format = "json";
  std::string plot_path;

  CLI::App* run = app.add_subcommand("run", "Run verification suites from a JSON config");
  run->add_option("--config", config_path, "JSON config file (defaults apply when omitted)");
  run->add_option("--suite", suites, "Suite to run (repeatable); overrides the config selection")
      ->check(CLI::IsMember(varbesov::suite::known_suites()));
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--trials", trials, "Random instances per check")->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Report destination ('-' for stdout)");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--plot", plot_path, "Also write j-vs-ratio plot data as CSV");

  CLI::App* defaults = app.add_subcommand("defaults", "Print the default config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using namespace varbesov::suite;
  if (defaults->parsed()) {
    std::cout << to_json(SuiteConfig::defaults()).dump(2) << "\n";
    return 0;
  }

  SuiteConfig config;
  try {
    config = config_path.empty() ? parse_config(nlohmann::json::object()) : load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "varbesov: config error at " << e.path() << ": " << e.what() << "\n";
    return 2;
  }
  if (!suites.empty()) config.suites = suites;
  if (seed) config.seed = *seed;
  if (trials) config.trials = *trials;

  const SuiteReport report = varbesov::suite::run(config);
  const int written = write_text(out_path, emit(report, format == "csv" ? Format::csv : Format::json));
  if (written != 0) return written;
  if (!plot_path.empty() && write_text(plot_path, emit_plot_csv(report)) != 0) return 2;

  for (const CheckRecord& c : report.checks)
    if (c.status == Status::fail) std::cerr << "FAIL " << c.id << " value=" << c.value << " bound=" << c.bound << "\n";
  return report.passed() ? 0 : 1;
}
