#ifndef SDCSIM_INTERLEAVE_HPP
#define SDCSIM_INTERLEAVE_HPP

#include "sdcsim/channel.hpp"

namespace sdcsim {

/// Row-column block interleaver geometry: `depth` codewords of
/// `codeword_length` bits are written as rows and read out as columns, so a
/// burst hitting adjacent transmitted bits lands in distinct codewords.
/// depth = 1 is the identity permutation.
struct InterleaveConfig {
  int codeword_length = 1;
  int depth = 1;

  std::size_t block_bits() const {
    return static_cast<std::size_t>(codeword_length) * static_cast<std::size_t>(depth);
  }
};

/// Permutes each block of depth consecutive codewords: output position
/// j*depth + i holds bit j of codeword i. Input length must be a multiple of
/// codeword_length*depth; throws std::invalid_argument otherwise.
BitVec interleave(const BitVec& bits, const InterleaveConfig& cfg);

/// Exact inverse of interleave.
BitVec deinterleave(const BitVec& bits, const InterleaveConfig& cfg);

}  // namespace sdcsim

#endif  // SDCSIM_INTERLEAVE_HPP
