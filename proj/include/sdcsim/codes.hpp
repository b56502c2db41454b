#ifndef SDCSIM_CODES_HPP
#define SDCSIM_CODES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdcsim/channel.hpp"

namespace sdcsim {

/// Dense binary matrix over GF(2), row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Bit& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Bit at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Matrix-vector product over GF(2); v.size() must equal cols().
  BitVec mul(const BitVec& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  BitVec data_;
};

struct DecodeResult {
  BitVec message;
  int corrected_bits = 0;
  bool detected_uncorrectable = false;
};

/// An [n, k] binary linear block code with guaranteed correction capability t.
/// encode is always the generator product c = G b; decode dispatches to the
/// decoder matching the code family (majority vote, syndrome-as-position,
/// extended-Golay syndrome cases, or pass-through).
class LinearCode {
 public:
  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int t() const { return t_; }
  double rate() const { return static_cast<double>(k_) / n_; }

  const BitMatrix& generator() const { return generator_; }
  const BitMatrix& parity_check() const { return parity_check_; }

  /// c = G b over GF(2). Throws std::invalid_argument on length mismatch.
  BitVec encode(const BitVec& message) const;

  /// Corrects any error of weight <= t; patterns that are detectable but not
  /// correctable set the flag and still return a best-effort message.
  DecodeResult decode(const BitVec& received) const;

  /// H d over GF(2); zero iff `received` is a codeword.
  BitVec syndrome(const BitVec& received) const;

  static LinearCode passthrough();       // "none": identity on 2-bit blocks
  static LinearCode repetition(int n);   // odd n, majority decoding
  static LinearCode hamming74();         // parity bits at positions 1, 2, 4
  static LinearCode golay2412();         // extended Golay, [I | B] form

 private:
  enum class Decoder { Passthrough, Majority, Hamming, Golay };

  LinearCode(std::string name, int n, int k, int t, Decoder decoder,
             BitMatrix generator, BitMatrix parity_check)
      : name_(std::move(name)), n_(n), k_(k), t_(t), decoder_(decoder),
        generator_(std::move(generator)), parity_check_(std::move(parity_check)) {}

  DecodeResult decode_majority(const BitVec& received) const;
  DecodeResult decode_hamming(const BitVec& received) const;
  DecodeResult decode_golay(const BitVec& received) const;

  std::string name_;
  int n_ = 0, k_ = 0, t_ = 0;
  Decoder decoder_ = Decoder::Passthrough;
  BitMatrix generator_;
  BitMatrix parity_check_;
  std::array<std::uint16_t, 12> golay_b_rows_{};  // rows of B as bit masks
};

/// The codes under test: none, rep3, rep5, rep7, hamming74, golay2412.
const std::vector<LinearCode>& code_catalog();

/// Catalog lookup by identifier; throws std::invalid_argument for unknown ids.
const LinearCode& find_code(std::string_view name);

}  // namespace sdcsim

#endif  // SDCSIM_CODES_HPP
