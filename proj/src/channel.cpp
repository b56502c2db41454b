#include "sdcsim/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sdcsim {

std::string_view BellSymbol::name() const {
  constexpr std::string_view names[4] = {"Phi+", "Phi-", "Psi+", "Psi-"};
  return names[label_];
}

std::string_view ErrorLabel::name() const {
  constexpr std::string_view names[4] = {"I", "Z", "X", "XZ"};  // by canonical label
  return names[label_];
}

PauliChannelParams::PauliChannelParams(double p_identity, double p_x, double p_z, double p_xz)
    : probs_{p_identity, p_x, p_z, p_xz} {
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("Pauli channel probability outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("Pauli channel probabilities must sum to 1, got " +
                                std::to_string(sum));
  }
}

PauliChannelParams PauliChannelParams::depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("depolarizing parameter outside [0, 1]");
  }
  return PauliChannelParams(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over golden-gamma spaced inputs
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

ErrorLabel sample_error(const PauliChannelParams& params, RandomStream& rng) {
  double u = rng.uniform();
  for (int index = 0; index < 3; ++index) {
    u -= params.prob_by_index(index);
    if (u < 0.0) {
      return ErrorLabel::from_index(index);
    }
  }
  return ErrorLabel::from_index(3);
}

std::array<std::array<double, 4>, 4> transition_matrix_sdc(const PauliChannelParams& params) {
  std::array<std::array<double, 4>, 4> m{};
  for (int received = 0; received < 4; ++received) {
    for (int sent = 0; sent < 4; ++sent) {
      m[received][sent] = params.prob_of(ErrorLabel::from_label(received ^ sent));
    }
  }
  return m;
}

std::vector<BellSymbol> transmit_sdc(const std::vector<BellSymbol>& symbols,
                                     const PauliChannelParams& params, RandomStream& rng) {
  std::vector<BellSymbol> out;
  out.reserve(symbols.size());
  for (BellSymbol s : symbols) {
    out.push_back(apply_error(s, sample_error(params, rng)));
  }
  return out;
}

BitVec transmit_direct(const BitVec& bits, const PauliChannelParams& params, RandomStream& rng) {
  BitVec out;
  out.reserve(bits.size());
  for (Bit b : bits) {
    ErrorLabel e = sample_error(params, rng);
    out.push_back(static_cast<Bit>(b ^ e.flips_b0()));
  }
  return out;
}

}  // namespace sdcsim
