#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "sdcsim/cli.hpp"

using namespace sdcsim;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

}  // namespace

TEST_CASE("p_grid") {
  CHECK(p_grid(0.05, 0.9, 1) == std::vector<double>{0.05});
  const auto grid = p_grid(0.0, 0.1, 11);
  REQUIRE(grid.size() == 11);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 0.1);
  CHECK(grid[5] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK_THROWS_AS(p_grid(0.2, 0.1, 5), std::invalid_argument);
  CHECK_THROWS_AS(p_grid(0.0, 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(p_grid(0.0, 1.5, 3), std::invalid_argument);
}

TEST_CASE("simulate mode emits the fixed CSV schema") {
  RunSpec spec;
  spec.mode = RunMode::Simulate;
  spec.code = "none";
  spec.p_steps = 11;
  spec.message_bits = 100'000;
  spec.seed = 42;
  std::ostringstream out, diag;
  CHECK(run(spec, out, diag) == kExitOk);
  CHECK(diag.str().empty());

  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] ==
        "p,channel,code,interleave_depth,pad_policy,bits_sent,bit_errors,ber,"
        "codewords,codeword_errors,cer,seed");

  // p = 0 row has no errors; later rows track 2p/3
  const auto first = split_csv(lines[1]);
  REQUIRE(first.size() == 12);
  CHECK(first[0] == "0");
  CHECK(first[7] == "0");
  for (std::size_t i = 1; i < 12; ++i) {
    const auto fields = split_csv(lines[i]);
    const double p = std::stod(fields[0]);
    const double ber = std::stod(fields[7]);
    CHECK(std::abs(ber - 2.0 * p / 3.0) <= 3.0 * std::sqrt(0.07 * 0.93 / 100'000.0) + 1e-12);
  }
}

TEST_CASE("identical spec and seed give byte-identical CSV") {
  RunSpec spec;
  spec.mode = RunMode::Simulate;
  spec.code = "rep3";
  spec.depth = 2;
  spec.p_steps = 5;
  spec.message_bits = 50'000;
  spec.seed = 7;
  std::ostringstream a, b, diag;
  CHECK(run(spec, a, diag) == kExitOk);
  CHECK(run(spec, b, diag) == kExitOk);
  CHECK(a.str() == b.str());
  CHECK_FALSE(a.str().empty());
}

TEST_CASE("every row is recomputable from its own columns") {
  RunSpec spec;
  spec.mode = RunMode::Simulate;
  spec.code = "hamming74";
  spec.p_steps = 3;
  spec.p_stop = 0.06;
  spec.message_bits = 40'000;
  spec.seed = 1234;
  std::ostringstream out, diag;
  REQUIRE(run(spec, out, diag) == kExitOk);
  const auto lines = lines_of(out.str());
  const auto fields = split_csv(lines[2]);

  TrialConfig cfg;
  cfg.code = fields[2];
  cfg.channel = fields[1] == "sdc" ? ChannelKind::Sdc : ChannelKind::Direct;
  cfg.p = std::stod(fields[0]);
  cfg.params = PauliChannelParams::depolarizing(cfg.p);
  cfg.interleave_depth = std::stoi(fields[3]);
  cfg.pad_policy = fields[4] == "percodeword" ? PadPolicy::PerCodewordPad
                                              : PadPolicy::ConcatenatePairs;
  cfg.message_bits = std::stoull(fields[5]);
  cfg.seed = std::stoull(fields[11]);
  CHECK(report_csv_row(run_point(cfg)) == lines[2]);
}

TEST_CASE("analytic mode emits the closed-form curves") {
  RunSpec spec;
  spec.mode = RunMode::Analytic;
  spec.p_steps = 3;
  std::ostringstream out, diag;
  CHECK(run(spec, out, diag) == kExitOk);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "p,ber_uncoded,ber_rep3_noninterleaved_ref,ber_rep3_interleaved,"
        "capacity_sdc,capacity_direct");
  const auto row0 = split_csv(lines[1]);
  CHECK(row0[0] == "0");
  CHECK(std::stod(row0[4]) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::stod(row0[5]) == doctest::Approx(1.0).epsilon(1e-12));
  const auto row_end = split_csv(lines[3]);
  CHECK(std::stod(row_end[1]) == doctest::Approx(2.0 * 0.1 / 3.0).epsilon(1e-10));
}

TEST_CASE("verify mode passes for the interleaved repetition config") {
  RunSpec spec;
  spec.mode = RunMode::Verify;
  spec.code = "rep3";
  spec.depth = 2;
  spec.p_start = 0.1;
  spec.p_stop = 0.1;
  spec.p_steps = 1;
  spec.message_bits = 200'000;
  std::ostringstream out, diag;
  CHECK(run(spec, out, diag) == kExitOk);
  CHECK(out.str().find("PASS") != std::string::npos);
  CHECK(out.str().find("0.0127407407") != std::string::npos);
  CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("verify mode reports the printed-curve audits") {
  RunSpec spec;
  spec.mode = RunMode::Verify;
  spec.code = "rep3";
  spec.depth = 1;
  spec.p_start = 0.1;
  spec.p_stop = 0.1;
  spec.p_steps = 1;
  spec.message_bits = 100'000;
  std::ostringstream out, diag;
  CHECK(run(spec, out, diag) == kExitOk);
  CHECK(out.str().find("INFO  printed-rep3-ber-audit") != std::string::npos);

  spec.code = "hamming74";
  std::ostringstream out2;
  CHECK(run(spec, out2, diag) == kExitOk);
  CHECK(out2.str().find("INFO  printed-fec-success-audit") != std::string::npos);
}

TEST_CASE("exit codes distinguish failure classes") {
  std::ostringstream out, diag;

  RunSpec bad_code;
  bad_code.code = "turbo";
  CHECK(run(bad_code, out, diag) == kExitUsage);

  RunSpec bad_grid;
  bad_grid.p_start = 0.5;
  bad_grid.p_stop = 0.1;
  CHECK(run(bad_grid, out, diag) == kExitUsage);

  RunSpec tiny;
  tiny.code = "golay2412";
  tiny.message_bits = 4;  // below k
  CHECK(run(tiny, out, diag) == kExitUsage);

  RunSpec budget;
  budget.mode = RunMode::Verify;
  budget.code = "golay2412";
  budget.p_steps = 1;
  CHECK(run(budget, out, diag) == kExitBudget);

  RunSpec direct_verify;
  direct_verify.mode = RunMode::Verify;
  direct_verify.channel = ChannelKind::Direct;
  CHECK(run(direct_verify, out, diag) == kExitUsage);
}
