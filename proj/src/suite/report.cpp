#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "varbesov/suite.hpp"

namespace varbesov::suite {

using nlohmann::json;

namespace {

std::string format12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json number_json(double v) {
  if (!std::isfinite(v)) return format12(v);
  return round12(v);
}

double number_from(const json& v) {
  if (v.is_number()) return v.get<double>();
  const std::string s = v.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "trivial") return Status::trivial;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format12(v).c_str(), nullptr);
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::trivial: return "trivial";
  }
  return "?";
}

bool SuiteReport::passed() const {
  for (const CheckRecord& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

std::string emit(const SuiteReport& report, Format format) {
  if (format == Format::csv) {
    std::ostringstream os;
    os << "id,status,value,bound,tolerance\n";
    for (const CheckRecord& c : report.checks)
      os << c.id << ',' << to_string(c.status) << ',' << format12(c.value) << ',' << format12(c.bound) << ','
         << format12(c.tolerance) << '\n';
    return os.str();
  }
  json checks = json::array();
  for (const CheckRecord& c : report.checks)
    checks.push_back({{"id", c.id},
                      {"status", to_string(c.status)},
                      {"value", number_json(c.value)},
                      {"bound", number_json(c.bound)},
                      {"tolerance", number_json(c.tolerance)}});
  json plot = json::array();
  for (const PlotPoint& p : report.plot)
    plot.push_back({{"series", p.series}, {"j", p.j}, {"value", number_json(p.value)}});
  json env = json::object();
  for (const auto& [k, v] : report.environment) env[k] = v;
  const json doc = {{"checks", checks},
                    {"config", report.config},
                    {"environment", env},
                    {"passed", report.passed()},
                    {"plot", plot}};
  return doc.dump(2) + "\n";
}

SuiteReport parse_report(const std::string& text) {
  const json doc = json::parse(text);
  SuiteReport r;
  for (const json& c : doc.at("checks"))
    r.checks.push_back({c.at("id").get<std::string>(), status_from(c.at("status").get<std::string>()),
                        number_from(c.at("value")), number_from(c.at("bound")), number_from(c.at("tolerance"))});
  for (const json& p : doc.at("plot"))
    r.plot.push_back({p.at("series").get<std::string>(), p.at("j").get<int>(), number_from(p.at("value"))});
  r.config = doc.at("config");
  for (auto it = doc.at("environment").begin(); it != doc.at("environment").end(); ++it)
    r.environment[it.key()] = it.value().get<std::string>();
  return r;
}

std::string emit_plot_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "series,j,value\n";
  for (const PlotPoint& p : report.plot) os << p.series << ',' << p.j << ',' << format12(p.value) << '\n';
  return os.str();
}

}  // namespace varbesov::suite
