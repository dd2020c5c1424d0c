#pragma once

// Configuration-driven verification runs: a JSON config selects suites and
// exponent families, the runner produces one record per check, and reports
// serialise canonically (sorted keys, 12 significant digits) so identical
// inputs give byte-identical output.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "varbesov/exponents.hpp"

namespace varbesov::suite {

// Schema violation; path is the dotted location of the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct Tolerances {
  double luxemburg = 1e-8;
  double reduction = 1e-6;
  double mixed = 1e-7;
  double unit_ball = 1e-7;
  double duality = 1e-4;
  double hardy = 1e-6;
  double partition = 1e-12;
  double besov = 1e-6;
  double commutator = 1e-10;
};

struct SuiteConfig {
  int dim = 1;
  std::size_t points = 4096;
  double half_width = 16.0;
  int J = 8;
  // Exponents by role: p, q, s for the norm suites; p1, p2, q1, q2, s1, s2
  // for the Hoelder and commutator splits.
  std::map<std::string, FamilySpec> exponents;
  std::vector<std::string> suites;
  int trials = 8;
  std::uint64_t seed = 1;
  Tolerances tolerances;

  static SuiteConfig defaults();
};

const std::vector<std::string>& known_suites();
const std::vector<std::string>& exponent_roles();

// Missing fields keep their defaults; unknown fields, wrong types and values
// out of range throw ConfigError.
SuiteConfig parse_config(const nlohmann::json& doc);
SuiteConfig load_config(const std::string& path);
nlohmann::json to_json(const SuiteConfig& config);

enum class Status { pass, fail, trivial };
const char* to_string(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::pass;
  double value = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
};

// (series, j, value) triples for j-vs-ratio plots.
struct PlotPoint {
  std::string series;
  int j = 0;
  double value = 0.0;
};

struct SuiteReport {
  std::vector<CheckRecord> checks;
  std::vector<PlotPoint> plot;
  nlohmann::json config = nlohmann::json::object();
  std::map<std::string, std::string> environment;

  bool passed() const;
};

SuiteReport run(const SuiteConfig& config);

enum class Format { json, csv };
std::string emit(const SuiteReport& report, Format format);
// Inverse of emit(json); plot data is carried along.
SuiteReport parse_report(const std::string& json_text);
std::string emit_plot_csv(const SuiteReport& report);

// Value rounded to 12 significant digits (what emit writes).
double round12(double v);

}  // namespace varbesov::suite
