#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sdcsim/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sdcsim: bit-error-rate simulator for coded transmission over a "
               "noisy entangled-pair channel"};

  std::string mode = "simulate";
  std::string code = "none";
  std::string channel = "sdc";
  std::string pad = "percodeword";
  std::string out_path;
  sdcsim::RunSpec spec;

  app.add_option("--mode", mode, "simulate | analytic | verify")
      ->check(CLI::IsMember({"simulate", "analytic", "verify"}));
  app.add_option("--code", code, "FEC code id")
      ->check(CLI::IsMember({"none", "rep3", "rep5", "rep7", "hamming74", "golay2412"}));
  app.add_option("--channel", channel, "sdc | direct")
      ->check(CLI::IsMember({"sdc", "direct"}));
  app.add_option("--p-start", spec.p_start, "first noise value (default 0)");
  app.add_option("--p-stop", spec.p_stop, "last noise value (default 0.1)");
  app.add_option("--p-steps", spec.p_steps, "grid points, inclusive (default 11)");
  app.add_option("--bits", spec.message_bits, "message bits per point (default 1000000)");
  app.add_option("--seed", spec.seed, "master seed (default 0)");
  app.add_option("--depth", spec.depth, "interleave depth (default 1)");
  app.add_option("--pad", pad, "percodeword | concat")
      ->check(CLI::IsMember({"percodeword", "concat"}));
  app.add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return sdcsim::kExitUsage;
  }

  spec.mode = mode == "simulate" ? sdcsim::RunMode::Simulate
              : mode == "analytic" ? sdcsim::RunMode::Analytic
                                   : sdcsim::RunMode::Verify;
  spec.code = code;
  spec.channel = channel == "sdc" ? sdcsim::ChannelKind::Sdc : sdcsim::ChannelKind::Direct;
  spec.pad = pad == "percodeword" ? sdcsim::PadPolicy::PerCodewordPad
                                  : sdcsim::PadPolicy::ConcatenatePairs;

  if (out_path.empty()) {
    return sdcsim::run(spec, std::cout, std::cerr);
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return sdcsim::kExitUsage;
  }
  return sdcsim::run(spec, file, std::cerr);
}
