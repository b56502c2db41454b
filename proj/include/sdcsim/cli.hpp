#ifndef SDCSIM_CLI_HPP
#define SDCSIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sdcsim/pipeline.hpp"

namespace sdcsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitBudget = 4;

/// CSV schema version for simulate-mode output (see report_csv_header).
inline constexpr int kCsvSchemaVersion = 1;

enum class RunMode { Simulate, Analytic, Verify };

struct RunSpec {
  RunMode mode = RunMode::Simulate;
  std::string code = "none";
  ChannelKind channel = ChannelKind::Sdc;
  double p_start = 0.0;
  double p_stop = 0.1;
  int p_steps = 11;
  std::size_t message_bits = 1'000'000;
  std::uint64_t seed = 0;
  int depth = 1;
  PadPolicy pad = PadPolicy::PerCodewordPad;
};

/// Inclusive linear grid; steps = 1 yields {start}.
std::vector<double> p_grid(double start, double stop, int steps);

std::string report_csv_header();
std::string report_csv_row(const TransmissionReport& r);

/// Executes one run. simulate and analytic modes write CSV to `out`; verify
/// mode writes one PASS/FAIL line per check. Diagnostics go to `diag` only.
/// Returns one of the kExit* codes.
int run(const RunSpec& spec, std::ostream& out, std::ostream& diag);

}  // namespace sdcsim

#endif  // SDCSIM_CLI_HPP
