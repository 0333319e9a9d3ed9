#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "qwalk/walk_core.hpp"

namespace qwalk::cli {

enum class Command { kSimulate, kAsymptotic, kSweepLocalized, kSweepH1, kGaussianScan, kVerify };
enum class Format { kCsv, kJson };
enum class IcKind { kLocalized, kH1, kGaussian };

struct RunConfig {
  Command command = Command::kSimulate;
  IcKind ic = IcKind::kLocalized;
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.7853981633974483;  // pi/4
  double phi = 0.0;
  std::vector<double> sigmas;  // empty: command default
  std::int64_t t_max = 200;
  std::size_t grid_n = kDefaultGridN;
  std::size_t steps1 = 64;
  std::size_t steps2 = 64;
  std::string out;  // empty: stdout
  Format format = Format::kCsv;

  static constexpr std::size_t kDefaultGridN = 1024;
};

/// "key = value" lines; '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Overrides fields of cfg with recognized keys. Unknown keys and malformed
/// values throw ParameterError.
void apply_settings(const std::map<std::string, std::string>& settings, RunConfig& cfg);

/// Checks the ranges that do not depend on the subcommand.
void validate(const RunConfig& cfg);

InitialCondition initial_condition(const RunConfig& cfg);

std::vector<double> parse_number_list(const std::string& text);
IcKind parse_ic(const std::string& text);
Format parse_format(const std::string& text);

}  // namespace qwalk::cli
