#pragma once

// Command-line front end: parses flags into a RunConfig, validates it and
// writes the requested table. Exit codes: 0 ok, 1 verification failure,
// 2 usage or configuration error.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracguide/fieldkit.hpp"
#include "fracguide/guide.hpp"
#include "fracguide/table.hpp"
#include "fracguide/types.hpp"

namespace fracguide::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Fields, Sweep, FieldLines, Impedance, Verify };
enum class OutputFormat { Csv, Json };
enum class LineSelection { E, H, Both };

struct AlphaRange {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.05;

  /// start, start + step, ... up to stop. A final value within 1e-9 step of
  /// stop is replaced by stop exactly.
  std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::Sweep;

  // Guide: either (b, n, k) or (angle, n, k) with b = n pi / (k sin angle).
  std::optional<double> b;
  std::optional<double> angle;
  int n = 1;
  double k = 1.0;
  double eta = 376.730313668;
  Complex amp_te{1.0, 0.0};
  Complex amp_tm{1.0, 0.0};

  std::optional<double> alpha;
  std::optional<AlphaRange> alpha_range;

  fieldkit::NormalizedPoint point{kPi / 4.0, kPi / 4.0};
  std::optional<fieldkit::SampleGrid> grid;
  double phase = 0.0;
  std::size_t seeds_y = 8;
  std::size_t seeds_z = 8;
  std::optional<double> step;
  std::size_t max_points = 500;
  LineSelection lines = LineSelection::Both;

  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> out;
};

/// Parses argv (argv[0] is the program name). Throws ConfigError on bad or
/// conflicting flags. Returns nothing when --help was handled.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Throws ConfigError naming the offending parameter.
void validate(const RunConfig& cfg);

/// Throws ConfigError when the parameters do not describe a propagating mode.
guide::GuideConfig make_guide(const RunConfig& cfg);

/// The alphas a command evaluates, after defaults.
std::vector<double> alphas_for(const RunConfig& cfg);

/// The result table of a data-emitting command.
table::Table build_table(const RunConfig& cfg);

/// Executes the command. Output goes to cfg.out (atomically) or to `out`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracguide::cli
