#include "spinitf/config.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "spinitf/types.hpp"

namespace spinitf {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  in >> out;
  if (in.fail() || !in.eof()) throw ArgumentError("bad value for " + key + ": '" + value + "'");
  return out;
}

void parse_delta(const std::string& value, RunConfig& cfg) {
  const auto slash = value.find('/');
  if (slash != std::string::npos) {
    cfg.lll_delta_num = parse_number<long>("lll_delta", trim(value.substr(0, slash)));
    cfg.lll_delta_den = parse_number<long>("lll_delta", trim(value.substr(slash + 1)));
  } else {
    // Decimal input is taken as a fraction over 10^6.
    const double d = parse_number<double>("lll_delta", value);
    cfg.lll_delta_den = 1'000'000;
    cfg.lll_delta_num = std::lround(d * 1e6);
  }
  const long g = std::gcd(cfg.lll_delta_num, cfg.lll_delta_den);
  if (g > 1) {
    cfg.lll_delta_num /= g;
    cfg.lll_delta_den /= g;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (precision_bits < 64 || precision_bits > 256) {
    throw ArgumentError("precision_bits must lie in [64, 256]");
  }
  if (!(cluster_tol > 0.0) || !(dark_tol > 0.0) || !(triangle_tol > 0.0)) {
    throw ArgumentError("tolerances must be positive");
  }
  if (lll_delta_den <= 0 || 4 * lll_delta_num <= lll_delta_den || lll_delta_num >= lll_delta_den) {
    throw ArgumentError("lll_delta must lie in (1/4, 1)");
  }
  if (ga.population < 2 || ga.max_gens < 1) throw ArgumentError("bad GA settings");
}

RunConfig parse_config(const std::string& text, RunConfig cfg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "precision_bits") {
      cfg.precision_bits = parse_number<int>(key, value);
    } else if (key == "cluster_tol") {
      cfg.cluster_tol = parse_number<double>(key, value);
    } else if (key == "dark_tol") {
      cfg.dark_tol = parse_number<double>(key, value);
    } else if (key == "triangle_tol") {
      cfg.triangle_tol = parse_number<double>(key, value);
    } else if (key == "lll_delta") {
      parse_delta(value, cfg);
    } else if (key == "ga.population") {
      cfg.ga.population = parse_number<std::size_t>(key, value);
    } else if (key == "ga.max_gens") {
      cfg.ga.max_gens = parse_number<std::size_t>(key, value);
    } else if (key == "ga.seed") {
      cfg.ga.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "output_format") {
      if (value == "json") {
        cfg.output_format = OutputFormat::json;
      } else if (value == "csv") {
        cfg.output_format = OutputFormat::csv;
      } else {
        throw ArgumentError("output_format must be json or csv");
      }
    } else {
      throw ArgumentError("unknown config key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

}  // namespace spinitf
