#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acnet/spectral_analysis.hpp"

namespace acnet::cli {

enum class Command { Spectrum, Verify, Sweep, Plot };

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kSolverFailure = 3,
  kVerificationFailure = 4,
};

enum class ReportFormat { Text, KeyValue, Both };

struct RunConfig {
  Command command = Command::Spectrum;
  std::optional<std::filesystem::path> network_path;
  bool example_p4 = false;
  Complex frequency{1.0, 0.0};
  bool dual = false;
  std::vector<double> s1_values;
  double s2 = 0.1;
  bool sweep_any = false;
  std::optional<std::filesystem::path> output_path;
  unsigned jobs = 1;
  Tolerances tolerances;
  SolverOptions solver;
  ReportFormat format = ReportFormat::Text;
};

/// Parses `a`, `bi`, `a+bi` or `a-bi` where a and b are decimal or
/// scientific reals; a missing b before `i` means 1.
std::optional<Complex> parse_complex(std::string_view text);

/// Parses the argument vector (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace acnet::cli
