#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "varbesov/suite.hpp"

namespace varbesov::suite {

using nlohmann::json;

ConfigError::ConfigError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {"lebesgue", "mixed",  "duality", "littlewood-paley",
                                                 "hardy",    "commutator"};
  return names;
}

const std::vector<std::string>& exponent_roles() {
  static const std::vector<std::string> roles = {"p", "q", "s", "p1", "p2", "q1", "q2", "s1", "s2"};
  return roles;
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig c;
  c.exponents = {
      {"p", {"oscillation", {{"a", 1.5}, {"b", 1.5}}}},
      {"q", {"log_decay", {{"a", 1.5}, {"b", 1.0}}}},
      {"s", {"log_decay", {{"a", 0.25}, {"b", 0.5}}}},
      {"p1", {"oscillation", {{"a", 3.0}, {"b", 2.0}}}},
      {"p2", {"constant", {{"value", 4.0}}}},
      {"q1", {"constant", {{"value", 4.0}}}},
      {"q2", {"log_decay", {{"a", 3.0}, {"b", 1.0}}}},
      {"s1", {"constant", {{"value", 0.3}}}},
      {"s2", {"oscillation", {{"a", 0.1}, {"b", 0.3}}}},
  };
  c.suites = known_suites();
  return c;
}

namespace {

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      throw ConfigError(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
  }
}

const json& object_at(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw ConfigError(path.empty() ? "$" : path, "expected an object");
  return doc;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path, "must be finite");
  return d;
}

double exponent_value(const json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  return number(v, path);
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<std::int64_t>();
}

FamilySpec parse_family(const json& v, const std::string& path, const std::string& role) {
  object_at(v, path);
  reject_unknown(v, path, {"family", "params"});
  if (!v.contains("family") || !v["family"].is_string()) throw ConfigError(path + ".family", "expected a family name");
  FamilySpec spec{v["family"].get<std::string>(), {}};
  if (!is_known_family(spec.name)) throw ConfigError(path + ".family", "unknown exponent family '" + spec.name + "'");
  if (v.contains("params")) {
    const std::string pp = path + ".params";
    object_at(v["params"], pp);
    for (auto it = v["params"].begin(); it != v["params"].end(); ++it)
      spec.params[it.key()] = exponent_value(it.value(), pp + "." + it.key());
  }
  // Build once on a small grid so parameter errors surface with a path.
  const bool smooth = role.front() == 's';
  try {
    make_family(Grid(1, 1.0, 8), spec, smooth ? ExponentKind::smoothness : ExponentKind::integrability);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
  return spec;
}

}  // namespace

SuiteConfig parse_config(const json& doc) {
  SuiteConfig c = SuiteConfig::defaults();
  object_at(doc, "");
  reject_unknown(doc, "", {"grid", "J", "exponents", "suites", "trials", "seed", "tolerances"});

  if (doc.contains("grid")) {
    const json& g = object_at(doc["grid"], "grid");
    reject_unknown(g, "grid", {"dim", "points", "half_width"});
    if (g.contains("dim")) {
      const auto d = integer(g["dim"], "grid.dim");
      if (d != 1 && d != 2) throw ConfigError("grid.dim", "must be 1 or 2");
      c.dim = static_cast<int>(d);
      if (!g.contains("points")) c.points = c.dim == 1 ? 4096 : 256;
      if (!g.contains("half_width")) c.half_width = c.dim == 1 ? 16.0 : 8.0;
    }
    if (g.contains("points")) {
      const auto n = integer(g["points"], "grid.points");
      if (n < 4 || !std::has_single_bit(static_cast<std::uint64_t>(n)))
        throw ConfigError("grid.points", "must be a power of two >= 4");
      c.points = static_cast<std::size_t>(n);
    }
    if (g.contains("half_width")) {
      c.half_width = number(g["half_width"], "grid.half_width");
      if (!(c.half_width > 0.0)) throw ConfigError("grid.half_width", "must be positive");
    }
  }
  if (doc.contains("J")) {
    const auto J = integer(doc["J"], "J");
    if (J < 0 || J > 20) throw ConfigError("J", "must lie in [0, 20]");
    c.J = static_cast<int>(J);
  }
  const Grid grid(c.dim, c.half_width, c.points);
  if (std::ldexp(1.0, c.J) > grid.nyquist())
    throw ConfigError("J", "2^J exceeds the grid Nyquist frequency " + std::to_string(grid.nyquist()));

  if (doc.contains("exponents")) {
    const json& e = object_at(doc["exponents"], "exponents");
    for (auto it = e.begin(); it != e.end(); ++it) {
      const auto& roles = exponent_roles();
      if (std::find(roles.begin(), roles.end(), it.key()) == roles.end())
        throw ConfigError("exponents." + it.key(), "unknown exponent role");
      c.exponents[it.key()] = parse_family(it.value(), "exponents." + it.key(), it.key());
    }
  }
  if (doc.contains("suites")) {
    const json& s = doc["suites"];
    if (!s.is_array()) throw ConfigError("suites", "expected an array of suite names");
    c.suites.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string path = "suites[" + std::to_string(i) + "]";
      if (!s[i].is_string()) throw ConfigError(path, "expected a suite name");
      const std::string name = s[i].get<std::string>();
      const auto& known = known_suites();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ConfigError(path, "unknown suite '" + name + "'");
      if (std::find(c.suites.begin(), c.suites.end(), name) == c.suites.end()) c.suites.push_back(name);
    }
  }
  if (doc.contains("trials")) {
    const auto t = integer(doc["trials"], "trials");
    if (t < 1) throw ConfigError("trials", "must be >= 1");
    c.trials = static_cast<int>(t);
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() && doc["seed"].get<std::int64_t>() >= 0))
      throw ConfigError("seed", "expected a non-negative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("tolerances")) {
    const json& t = object_at(doc["tolerances"], "tolerances");
    std::map<std::string, double*> slots = {
        {"luxemburg", &c.tolerances.luxemburg}, {"reduction", &c.tolerances.reduction},
        {"mixed", &c.tolerances.mixed},         {"unit_ball", &c.tolerances.unit_ball},
        {"duality", &c.tolerances.duality},     {"hardy", &c.tolerances.hardy},
        {"partition", &c.tolerances.partition}, {"besov", &c.tolerances.besov},
        {"commutator", &c.tolerances.commutator}};
    for (auto it = t.begin(); it != t.end(); ++it) {
      const std::string path = "tolerances." + it.key();
      auto slot = slots.find(it.key());
      if (slot == slots.end()) throw ConfigError(path, "unknown tolerance");
      const double v = number(it.value(), path);
      if (!(v > 0.0)) throw ConfigError(path, "must be positive");
      *slot->second = v;
    }
  }
  return c;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$", "cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

json to_json(const SuiteConfig& c) {
  json e = json::object();
  for (const auto& [role, spec] : c.exponents) {
    json params = json::object();
    for (const auto& [k, v] : spec.params) params[k] = std::isfinite(v) ? json(v) : json("inf");
    e[role] = {{"family", spec.name}, {"params", params}};
  }
  const Tolerances& t = c.tolerances;
  return {{"grid", {{"dim", c.dim}, {"points", c.points}, {"half_width", c.half_width}}},
          {"J", c.J},
          {"exponents", e},
          {"suites", c.suites},
          {"trials", c.trials},
          {"seed", c.seed},
          {"tolerances",
           {{"luxemburg", t.luxemburg},
            {"reduction", t.reduction},
            {"mixed", t.mixed},
            {"unit_ball", t.unit_ball},
            {"duality", t.duality},
            {"hardy", t.hardy},
            {"partition", t.partition},
            {"besov", t.besov},
            {"commutator", t.commutator}}}};
}

}  // namespace varbesov::suite
