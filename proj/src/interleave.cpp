#include "sdcsim/interleave.hpp"

#include <stdexcept>
#include <string>

namespace sdcsim {

namespace {

void check_config(const BitVec& bits, const InterleaveConfig& cfg) {
  if (cfg.codeword_length < 1 || cfg.depth < 1) {
    throw std::invalid_argument("interleave: codeword_length and depth must be >= 1");
  }
  if (bits.size() % cfg.block_bits() != 0) {
    throw std::invalid_argument("interleave: input length " + std::to_string(bits.size()) +
                                " is not a multiple of the " + std::to_string(cfg.block_bits()) +
                                "-bit block");
  }
}

}  // namespace

BitVec interleave(const BitVec& bits, const InterleaveConfig& cfg) {
  check_config(bits, cfg);
  if (cfg.depth == 1) {
    return bits;
  }
  const std::size_t n = static_cast<std::size_t>(cfg.codeword_length);
  const std::size_t d = static_cast<std::size_t>(cfg.depth);
  BitVec out(bits.size());
  for (std::size_t block = 0; block < bits.size(); block += n * d) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        out[block + j * d + i] = bits[block + i * n + j];
      }
    }
  }
  return out;
}

BitVec deinterleave(const BitVec& bits, const InterleaveConfig& cfg) {
  check_config(bits, cfg);
  if (cfg.depth == 1) {
    return bits;
  }
  const std::size_t n = static_cast<std::size_t>(cfg.codeword_length);
  const std::size_t d = static_cast<std::size_t>(cfg.depth);
  BitVec out(bits.size());
  for (std::size_t block = 0; block < bits.size(); block += n * d) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        out[block + i * n + j] = bits[block + j * d + i];
      }
    }
  }
  return out;
}

}  // namespace sdcsim
