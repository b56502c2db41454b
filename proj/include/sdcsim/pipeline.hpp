#ifndef SDCSIM_PIPELINE_HPP
#define SDCSIM_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdcsim/channel.hpp"
#include "sdcsim/codes.hpp"
#include "sdcsim/interleave.hpp"

namespace sdcsim {

enum class ChannelKind { Sdc, Direct };

/// How odd-length codewords are made even before symbol mapping:
/// PerCodewordPad appends one 0 to each codeword; ConcatenatePairs joins two
/// consecutive codewords into a 2n-bit unit. Even-length codewords pass
/// through untouched under either policy.
enum class PadPolicy { PerCodewordPad, ConcatenatePairs };

std::string_view to_string(ChannelKind kind);
std::string_view to_string(PadPolicy pad);

/// Framing geometry derived from (code, pad policy, interleave depth).
/// A block is the smallest self-contained transmission unit: `depth`
/// interleaved units, each holding one codeword (or a concatenated pair).
struct FramePlan {
  int n = 0;             // codeword bits
  int k = 0;             // message bits per codeword
  int unit_len = 0;      // bits per framed unit (after pad / pairing)
  int cw_per_unit = 1;   // 2 when odd-n codewords are concatenated pairwise
  int depth = 1;
  bool pad_per_cw = false;

  int cw_per_block() const { return cw_per_unit * depth; }
  std::size_t block_bits() const {
    return static_cast<std::size_t>(unit_len) * static_cast<std::size_t>(depth);
  }
  std::size_t symbols_per_block() const { return block_bits() / 2; }
  /// Message lengths must be a multiple of this for the framing to tile.
  std::size_t message_alignment() const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(cw_per_block());
  }
  InterleaveConfig interleave_config() const { return {unit_len, depth}; }
};

FramePlan plan_frame(const LinearCode& code, PadPolicy pad, int depth);

/// Pads (or pairs) a stream of codewords and applies the block interleaver;
/// the result has even length and is ready for symbol mapping.
BitVec frame_bits(const BitVec& codewords, const LinearCode& code, PadPolicy pad, int depth);

/// Inverse of frame_bits: deinterleaves and strips pad bits, recovering the
/// received codeword stream.
BitVec deframe_bits(const BitVec& framed, const LinearCode& code, PadPolicy pad, int depth);

/// Consecutive bit pairs (c_{2i}, c_{2i+1}) -> Bell symbols. Input length
/// must be even.
std::vector<BellSymbol> map_to_symbols(const BitVec& bits);

/// Exact inverse of map_to_symbols.
BitVec unmap_to_bits(const std::vector<BellSymbol>& symbols);

struct TrialConfig {
  std::string code = "none";
  ChannelKind channel = ChannelKind::Sdc;
  PauliChannelParams params = PauliChannelParams::depolarizing(0.0);
  double p = 0.0;  // noise label reported alongside results
  int interleave_depth = 1;
  std::size_t message_bits = 1'000'000;
  std::uint64_t seed = 0;
  PadPolicy pad_policy = PadPolicy::PerCodewordPad;
};

struct TransmissionReport {
  double p = 0.0;
  ChannelKind channel = ChannelKind::Sdc;
  std::string code;
  int interleave_depth = 1;
  PadPolicy pad_policy = PadPolicy::PerCodewordPad;
  std::uint64_t bits_sent = 0;
  std::uint64_t bit_errors = 0;
  double ber = 0.0;
  std::uint64_t codewords = 0;
  std::uint64_t codeword_errors = 0;
  double cer = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const TransmissionReport&, const TransmissionReport&) = default;
};

/// Rounds a requested message size up to the framing alignment of
/// (code, pad, depth); never returns less than one alignment unit.
std::size_t aligned_message_bits(std::size_t requested, const LinearCode& code, PadPolicy pad,
                                 int depth);

/// count independent fair bits, one engine draw each.
BitVec random_message(std::size_t count, RandomStream& rng);

/// Runs the full chain (encode, frame, channel, deframe, decode) on one
/// message and counts bit and codeword errors against it. The message length
/// must be a multiple of the framing alignment. The channel stream is seeded
/// from mix_seed(cfg.seed, 0), so a trial is a pure function of its config.
TransmissionReport run_trial(const TrialConfig& cfg, const BitVec& message);

/// run_trial on a self-generated random message of aligned_message_bits(
/// cfg.message_bits) bits drawn from mix_seed(cfg.seed, 1). Every report is
/// reproducible from its own (config, seed) fields via this function.
TransmissionReport run_point(const TrialConfig& cfg);

/// One report per grid value; point i uses depolarizing(p_grid[i]) and seed
/// mix_seed(base.seed, i), so results are independent of execution order.
/// threads > 1 evaluates points concurrently with identical output.
std::vector<TransmissionReport> sweep(const TrialConfig& base, const std::vector<double>& p_grid,
                                      unsigned threads = 1);

}  // namespace sdcsim

#endif  // SDCSIM_PIPELINE_HPP
