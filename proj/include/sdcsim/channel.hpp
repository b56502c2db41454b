#ifndef SDCSIM_CHANNEL_HPP
#define SDCSIM_CHANNEL_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace sdcsim {

using Bit = std::uint8_t;
using BitVec = std::vector<Bit>;

/// One of the four Bell states, identified by the bit pair (b0, b1) selecting
/// the encoding operator X^b0 Z^b1 applied to the fiducial pair state.
/// Canonical integer label = 2*b0 + b1:
///   0 = Phi+, 1 = Phi-, 2 = Psi+, 3 = Psi-.
class BellSymbol {
 public:
  constexpr BellSymbol() = default;

  static constexpr BellSymbol from_bits(Bit b0, Bit b1) {
    return BellSymbol(static_cast<std::uint8_t>(((b0 & 1u) << 1) | (b1 & 1u)));
  }
  static constexpr BellSymbol from_label(int label) {
    return BellSymbol(static_cast<std::uint8_t>(label & 3));
  }

  constexpr int label() const { return label_; }
  constexpr Bit b0() const { return static_cast<Bit>(label_ >> 1); }
  constexpr Bit b1() const { return static_cast<Bit>(label_ & 1); }

  /// Display name per the usual convention: Phi+/Phi-/Psi+/Psi-.
  std::string_view name() const;

  friend constexpr bool operator==(BellSymbol a, BellSymbol b) { return a.label_ == b.label_; }
  friend constexpr bool operator!=(BellSymbol a, BellSymbol b) { return a.label_ != b.label_; }

 private:
  constexpr explicit BellSymbol(std::uint8_t label) : label_(label) {}
  std::uint8_t label_ = 0;
};

/// A Pauli error acting on one transmitted symbol. Stored as the canonical
/// 2-bit label (flip_b0, flip_b1); labels compose by XOR (Klein four-group).
/// The four errors in probability-vector order are I, X, Z, XZ; note the
/// canonical labels of that ordering are {0, 2, 1, 3} since X flips b0.
class ErrorLabel {
 public:
  constexpr ErrorLabel() = default;

  static constexpr ErrorLabel from_label(int label) {
    return ErrorLabel(static_cast<std::uint8_t>(label & 3));
  }
  /// index is the position in the (I, X, Z, XZ) probability vector.
  static constexpr ErrorLabel from_index(int index) {
    constexpr std::uint8_t lab[4] = {0, 2, 1, 3};
    return ErrorLabel(lab[index & 3]);
  }

  static const ErrorLabel I, X, Z, XZ;

  constexpr int label() const { return label_; }
  constexpr int index() const {
    constexpr std::uint8_t idx[4] = {0, 2, 1, 3};  // involution: swaps 1 and 2
    return idx[label_];
  }
  constexpr Bit flips_b0() const { return static_cast<Bit>(label_ >> 1); }
  constexpr Bit flips_b1() const { return static_cast<Bit>(label_ & 1); }

  std::string_view name() const;

  friend constexpr bool operator==(ErrorLabel a, ErrorLabel b) { return a.label_ == b.label_; }
  friend constexpr bool operator!=(ErrorLabel a, ErrorLabel b) { return a.label_ != b.label_; }

 private:
  constexpr explicit ErrorLabel(std::uint8_t label) : label_(label) {}
  std::uint8_t label_ = 0;
};

inline constexpr ErrorLabel ErrorLabel::I = ErrorLabel::from_index(0);
inline constexpr ErrorLabel ErrorLabel::X = ErrorLabel::from_index(1);
inline constexpr ErrorLabel ErrorLabel::Z = ErrorLabel::from_index(2);
inline constexpr ErrorLabel ErrorLabel::XZ = ErrorLabel::from_index(3);

/// Probability vector (p0, p1, p2, p3) over the error operators I, X, Z, XZ.
/// Probabilities must be in [0, 1] and sum to 1 within 1e-12.
class PauliChannelParams {
 public:
  PauliChannelParams(double p_identity, double p_x, double p_z, double p_xz);

  /// (1-p, p/3, p/3, p/3); requires p in [0, 1].
  static PauliChannelParams depolarizing(double p);

  double prob_by_index(int index) const { return probs_[index & 3]; }
  double prob_of(ErrorLabel e) const { return probs_[e.index()]; }

  double p_identity() const { return probs_[0]; }
  double p_x() const { return probs_[1]; }
  double p_z() const { return probs_[2]; }
  double p_xz() const { return probs_[3]; }

 private:
  std::array<double, 4> probs_;  // ordered I, X, Z, XZ
};

/// Seedable uniform random stream. Wraps std::mt19937_64; uniform() maps the
/// top 53 bits of one engine output to [0, 1), so every draw consumes exactly
/// one engine step and results are reproducible across platforms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next_u64() { return engine_(); }
  Bit next_bit() { return static_cast<Bit>(engine_() & 1u); }

 private:
  std::mt19937_64 engine_;
};

/// Stateless seed mixer (splitmix64 of seed + (index+1)*golden-gamma); used to
/// derive independent per-point and per-purpose streams from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Two message bits -> Bell symbol, matching the codeword worked example
/// ((0,0) -> Phi+, (1,1) -> Psi-, (1,0) -> Psi+).
inline constexpr BellSymbol symbol_from_bits(Bit b0, Bit b1) {
  return BellSymbol::from_bits(b0, b1);
}

/// Group action of a Pauli error on a Bell symbol: component-wise XOR of the
/// labels. Applying the same error twice is the identity.
inline constexpr BellSymbol apply_error(BellSymbol s, ErrorLabel e) {
  return BellSymbol::from_label(s.label() ^ e.label());
}

/// Draws one error by inverse CDF over (I, X, Z, XZ); exactly one uniform
/// draw per call.
ErrorLabel sample_error(const PauliChannelParams& params, RandomStream& rng);

/// 4x4 transition matrix: entry [received][sent] = Prob(received | sent).
/// Depends only on the label XOR offset, so every column is a permutation of
/// the error probabilities and sums to 1.
std::array<std::array<double, 4>, 4> transition_matrix_sdc(const PauliChannelParams& params);

/// Sends each symbol through an independent draw of the Pauli channel.
std::vector<BellSymbol> transmit_sdc(const std::vector<BellSymbol>& symbols,
                                     const PauliChannelParams& params, RandomStream& rng);

/// Direct (unentangled) transmission baseline: one qubit per bit, one channel
/// use each. Only the X component of a sampled error flips the bit; Z alone
/// is absorbed as an unobservable phase.
BitVec transmit_direct(const BitVec& bits, const PauliChannelParams& params, RandomStream& rng);

}  // namespace sdcsim

#endif  // SDCSIM_CHANNEL_HPP
