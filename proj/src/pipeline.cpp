#include "sdcsim/pipeline.hpp"

#include <stdexcept>
#include <string>
#include <thread>

namespace sdcsim {

std::string_view to_string(ChannelKind kind) {
  return kind == ChannelKind::Sdc ? "sdc" : "direct";
}

std::string_view to_string(PadPolicy pad) {
  return pad == PadPolicy::PerCodewordPad ? "percodeword" : "concat";
}

FramePlan plan_frame(const LinearCode& code, PadPolicy pad, int depth) {
  if (depth < 1) {
    throw std::invalid_argument("interleave depth must be >= 1");
  }
  FramePlan plan;
  plan.n = code.n();
  plan.k = code.k();
  plan.depth = depth;
  if (code.n() % 2 != 0) {
    if (pad == PadPolicy::PerCodewordPad) {
      plan.unit_len = code.n() + 1;
      plan.cw_per_unit = 1;
      plan.pad_per_cw = true;
    } else {
      plan.unit_len = 2 * code.n();
      plan.cw_per_unit = 2;
    }
  } else {
    plan.unit_len = code.n();
    plan.cw_per_unit = 1;
  }
  return plan;
}

BitVec frame_bits(const BitVec& codewords, const LinearCode& code, PadPolicy pad, int depth) {
  const FramePlan plan = plan_frame(code, pad, depth);
  const std::size_t n = static_cast<std::size_t>(plan.n);
  if (codewords.size() % n != 0) {
    throw std::invalid_argument("frame_bits: input is not a whole number of codewords");
  }
  const std::size_t cw_count = codewords.size() / n;
  if (cw_count % static_cast<std::size_t>(plan.cw_per_unit) != 0) {
    throw std::invalid_argument("frame_bits: concatenate-pairs needs an even codeword count");
  }
  BitVec framed;
  if (plan.pad_per_cw) {
    framed.reserve(cw_count * (n + 1));
    for (std::size_t c = 0; c < cw_count; ++c) {
      framed.insert(framed.end(), codewords.begin() + static_cast<std::ptrdiff_t>(c * n),
                    codewords.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
      framed.push_back(0);
    }
  } else {
    framed = codewords;
  }
  return interleave(framed, plan.interleave_config());
}

BitVec deframe_bits(const BitVec& framed, const LinearCode& code, PadPolicy pad, int depth) {
  const FramePlan plan = plan_frame(code, pad, depth);
  BitVec flat = deinterleave(framed, plan.interleave_config());
  if (!plan.pad_per_cw) {
    return flat;
  }
  const std::size_t unit = static_cast<std::size_t>(plan.unit_len);
  const std::size_t n = static_cast<std::size_t>(plan.n);
  BitVec out;
  out.reserve(flat.size() / unit * n);
  for (std::size_t u = 0; u < flat.size(); u += unit) {
    out.insert(out.end(), flat.begin() + static_cast<std::ptrdiff_t>(u),
               flat.begin() + static_cast<std::ptrdiff_t>(u + n));
  }
  return out;
}

std::vector<BellSymbol> map_to_symbols(const BitVec& bits) {
  if (bits.size() % 2 != 0) {
    throw std::invalid_argument("map_to_symbols: bit count must be even");
  }
  std::vector<BellSymbol> symbols;
  symbols.reserve(bits.size() / 2);
  for (std::size_t i = 0; i < bits.size(); i += 2) {
    symbols.push_back(symbol_from_bits(bits[i], bits[i + 1]));
  }
  return symbols;
}

BitVec unmap_to_bits(const std::vector<BellSymbol>& symbols) {
  BitVec bits;
  bits.reserve(symbols.size() * 2);
  for (BellSymbol s : symbols) {
    bits.push_back(s.b0());
    bits.push_back(s.b1());
  }
  return bits;
}

std::size_t aligned_message_bits(std::size_t requested, const LinearCode& code, PadPolicy pad,
                                 int depth) {
  const std::size_t align = plan_frame(code, pad, depth).message_alignment();
  if (requested == 0) {
    return align;
  }
  return (requested + align - 1) / align * align;
}

BitVec random_message(std::size_t count, RandomStream& rng) {
  BitVec message(count);
  for (Bit& b : message) {
    b = rng.next_bit();
  }
  return message;
}

TransmissionReport run_trial(const TrialConfig& cfg, const BitVec& message) {
  const LinearCode& code = find_code(cfg.code);
  const FramePlan plan = plan_frame(code, cfg.pad_policy, cfg.interleave_depth);
  if (message.empty() || message.size() % plan.message_alignment() != 0) {
    throw std::invalid_argument("run_trial: message length must be a nonzero multiple of " +
                                std::to_string(plan.message_alignment()) + " bits for " +
                                cfg.code);
  }

  const std::size_t k = static_cast<std::size_t>(plan.k);
  const std::size_t n = static_cast<std::size_t>(plan.n);
  const std::size_t cw_count = message.size() / k;

  BitVec codewords;
  codewords.reserve(cw_count * n);
  BitVec block(k);
  for (std::size_t c = 0; c < cw_count; ++c) {
    block.assign(message.begin() + static_cast<std::ptrdiff_t>(c * k),
                 message.begin() + static_cast<std::ptrdiff_t>((c + 1) * k));
    const BitVec cw = code.encode(block);
    codewords.insert(codewords.end(), cw.begin(), cw.end());
  }

  const BitVec framed = frame_bits(codewords, code, cfg.pad_policy, cfg.interleave_depth);

  RandomStream channel_rng(mix_seed(cfg.seed, 0));
  BitVec received_framed;
  if (cfg.channel == ChannelKind::Sdc) {
    const auto received = transmit_sdc(map_to_symbols(framed), cfg.params, channel_rng);
    received_framed = unmap_to_bits(received);
  } else {
    received_framed = transmit_direct(framed, cfg.params, channel_rng);
  }

  const BitVec received_cw = deframe_bits(received_framed, code, cfg.pad_policy,
                                          cfg.interleave_depth);

  TransmissionReport report;
  report.p = cfg.p;
  report.channel = cfg.channel;
  report.code = cfg.code;
  report.interleave_depth = cfg.interleave_depth;
  report.pad_policy = cfg.pad_policy;
  report.bits_sent = message.size();
  report.codewords = cw_count;
  report.seed = cfg.seed;

  BitVec rx_block(n);
  for (std::size_t c = 0; c < cw_count; ++c) {
    rx_block.assign(received_cw.begin() + static_cast<std::ptrdiff_t>(c * n),
                    received_cw.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
    const DecodeResult decoded = code.decode(rx_block);
    std::uint64_t wrong = 0;
    for (std::size_t j = 0; j < k; ++j) {
      wrong += decoded.message[j] != message[c * k + j];
    }
    report.bit_errors += wrong;
    report.codeword_errors += wrong != 0;
  }
  report.ber = static_cast<double>(report.bit_errors) / static_cast<double>(report.bits_sent);
  report.cer = static_cast<double>(report.codeword_errors) / static_cast<double>(report.codewords);
  return report;
}

TransmissionReport run_point(const TrialConfig& cfg) {
  const LinearCode& code = find_code(cfg.code);
  const std::size_t bits = aligned_message_bits(cfg.message_bits, code, cfg.pad_policy,
                                                cfg.interleave_depth);
  RandomStream message_rng(mix_seed(cfg.seed, 1));
  return run_trial(cfg, random_message(bits, message_rng));
}

std::vector<TransmissionReport> sweep(const TrialConfig& base, const std::vector<double>& p_grid,
                                      unsigned threads) {
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("sweep: noise values must lie in [0, 1]");
    }
  }
  std::vector<TransmissionReport> reports(p_grid.size());
  auto run_index = [&](std::size_t i) {
    TrialConfig cfg = base;
    cfg.p = p_grid[i];
    cfg.params = PauliChannelParams::depolarizing(p_grid[i]);
    cfg.seed = mix_seed(base.seed, i);
    reports[i] = run_point(cfg);
  };
  if (threads <= 1 || p_grid.size() <= 1) {
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
      run_index(i);
    }
    return reports;
  }
  const unsigned worker_count = std::min<unsigned>(threads, static_cast<unsigned>(p_grid.size()));
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (unsigned w = 0; w < worker_count; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < p_grid.size(); i += worker_count) {
        run_index(i);
      }
    });
  }
  for (std::thread& t : workers) {
    t.join();
  }
  return reports;
}

}  // namespace sdcsim
