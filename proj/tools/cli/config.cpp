#include "cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("bad number for " + key + ": '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("bad number for " + key + ": '" + text + "'");
  return value;
}

std::int64_t parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("bad integer for " + key + ": '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("bad integer for " + key + ": '" + text + "'");
  return value;
}

std::size_t parse_size(const std::string& key, const std::string& text) {
  const std::int64_t v = parse_int(key, text);
  if (v < 0) throw ParameterError(key + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParameterError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParameterError("empty entry in number list '" + text + "'");
    out.push_back(parse_double("list", item));
  }
  if (out.empty()) throw ParameterError("empty number list");
  return out;
}

IcKind parse_ic(const std::string& text) {
  if (text == "localized") return IcKind::kLocalized;
  if (text == "h1") return IcKind::kH1;
  if (text == "gaussian") return IcKind::kGaussian;
  throw ParameterError("unknown initial condition '" + text + "' (localized, h1, gaussian)");
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw ParameterError("unknown format '" + text + "' (csv, json)");
}

void apply_settings(const std::map<std::string, std::string>& settings, RunConfig& cfg) {
  for (const auto& [key, value] : settings) {
    if (key == "ic") {
      cfg.ic = parse_ic(value);
    } else if (key == "alpha") {
      cfg.alpha = parse_double(key, value);
    } else if (key == "beta") {
      cfg.beta = parse_double(key, value);
    } else if (key == "theta") {
      cfg.theta = parse_double(key, value);
    } else if (key == "phi") {
      cfg.phi = parse_double(key, value);
    } else if (key == "sigma") {
      cfg.sigmas = parse_number_list(value);
    } else if (key == "tmax") {
      cfg.t_max = parse_int(key, value);
    } else if (key == "grid-n") {
      cfg.grid_n = parse_size(key, value);
    } else if (key == "steps") {
      cfg.steps1 = cfg.steps2 = parse_size(key, value);
    } else if (key == "steps1") {
      cfg.steps1 = parse_size(key, value);
    } else if (key == "steps2") {
      cfg.steps2 = parse_size(key, value);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else {
      throw ParameterError("unknown setting '" + key + "'");
    }
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.t_max < 0) throw ParameterError("tmax must be non-negative");
  if (cfg.grid_n == 0 || cfg.grid_n % 2 != 0) throw ParameterError("grid-n must be even and positive");
  const double pi = std::numbers::pi;
  if (std::abs(cfg.alpha) > pi || std::abs(cfg.beta) > pi) throw ParameterError("alpha and beta must lie in [-pi, pi]");
  if (std::abs(cfg.theta) > pi / 2 || std::abs(cfg.phi) > pi) {
    throw ParameterError("theta must lie in [-pi/2, pi/2] and phi in [-pi, pi]");
  }
  if (cfg.steps1 < 2 || cfg.steps2 < 2) throw ParameterError("sweep grids need at least 2 points per axis");
  for (double s : cfg.sigmas) {
    if (!(s > 0.0)) throw ParameterError("sigma values must be positive");
  }
}

InitialCondition initial_condition(const RunConfig& cfg) {
  switch (cfg.ic) {
    case IcKind::kLocalized:
      return Localized{cfg.alpha, cfg.beta};
    case IcKind::kH1:
      return H1{cfg.theta, cfg.phi};
    case IcKind::kGaussian:
      return Gaussian{cfg.sigmas.empty() ? 4.0 : cfg.sigmas.front()};
  }
  throw ParameterError("unhandled initial condition");
}

}  // namespace qwalk::cli
