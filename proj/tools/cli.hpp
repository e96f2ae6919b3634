#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "galilei/lie_algebra.hpp"

namespace galilei::cli {

enum class Format { json, csv, human };

/// Exit statuses of the driver.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kConfigError = 2;

/// Raised for anything that should end the run with kConfigError.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ExtensionParams params{Rational(1), Rational(1), Rational(0)};
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  unsigned max_degree = 2;
  std::vector<double> c_grid;
  double tolerance = 0.0;
  Format format = Format::json;
  std::string experiment = "all";
  std::string algebra_file;
};

/// One row of a report. `defect` is a string for exact checks, a number for
/// floating ones and null for skipped checks.
struct Check {
  std::string name;
  nlohmann::json defect;
  bool pass = true;
  std::string note;
};

struct Report {
  std::string command;
  nlohmann::json config;
  std::vector<Check> checks;
  /// Command-specific payload (centralizer basis, products, ...).
  nlohmann::json details;
  /// Replaces the per-check CSV rows when non-empty.
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  bool pass() const;
};

Report verify_algebra(const RunConfig& config);
Report casimir(const RunConfig& config);
Report group(const RunConfig& config);
Report contract(const RunConfig& config);

std::string render(const Report& report, const RunConfig& config);

/// Parses argv, runs the subcommand and writes the report to `out` (or to
/// --out). Diagnostics go to `err`. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galilei::cli
