#include "sdcsim/codes.hpp"

#include <bit>
#include <stdexcept>

namespace sdcsim {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

BitVec BitMatrix::mul(const BitVec& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("BitMatrix::mul: vector length " + std::to_string(v.size()) +
                                " does not match " + std::to_string(cols_) + " columns");
  }
  BitVec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Bit acc = 0;
    const Bit* row = &data_[r * cols_];
    for (std::size_t c = 0; c < cols_; ++c) {
      acc ^= static_cast<Bit>(row[c] & v[c]);
    }
    out[r] = acc;
  }
  return out;
}

BitVec LinearCode::encode(const BitVec& message) const {
  if (message.size() != static_cast<std::size_t>(k_)) {
    throw std::invalid_argument(name_ + " encode: expected " + std::to_string(k_) +
                                " message bits, got " + std::to_string(message.size()));
  }
  return generator_.mul(message);
}

BitVec LinearCode::syndrome(const BitVec& received) const {
  if (received.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument(name_ + " syndrome: expected " + std::to_string(n_) +
                                " bits, got " + std::to_string(received.size()));
  }
  return parity_check_.mul(received);
}

DecodeResult LinearCode::decode(const BitVec& received) const {
  if (received.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument(name_ + " decode: expected " + std::to_string(n_) +
                                " bits, got " + std::to_string(received.size()));
  }
  switch (decoder_) {
    case Decoder::Passthrough:
      return DecodeResult{received, 0, false};
    case Decoder::Majority:
      return decode_majority(received);
    case Decoder::Hamming:
      return decode_hamming(received);
    case Decoder::Golay:
      return decode_golay(received);
  }
  throw std::logic_error("unreachable");
}

DecodeResult LinearCode::decode_majority(const BitVec& received) const {
  int weight = 0;
  for (Bit b : received) {
    weight += b;
  }
  Bit bit = static_cast<Bit>(2 * weight > n_ ? 1 : 0);
  int corrected = bit ? n_ - weight : weight;
  return DecodeResult{BitVec{bit}, corrected, false};
}

DecodeResult LinearCode::decode_hamming(const BitVec& received) const {
  // Syndrome bits read as a binary number give the 1-indexed error position.
  BitVec r = received;
  int pos = 0;
  for (int row = 0; row < 3; ++row) {
    Bit s = 0;
    for (int c = 0; c < 7; ++c) {
      s ^= static_cast<Bit>(parity_check_.at(row, c) & r[c]);
    }
    pos |= s << row;
  }
  int corrected = 0;
  if (pos != 0) {
    r[pos - 1] ^= 1;
    corrected = 1;
  }
  return DecodeResult{BitVec{r[2], r[4], r[5], r[6]}, corrected, false};
}

DecodeResult LinearCode::decode_golay(const BitVec& received) const {
  auto mask_of = [](const BitVec& v, int offset) {
    std::uint16_t m = 0;
    for (int i = 0; i < 12; ++i) {
      m |= static_cast<std::uint16_t>(v[offset + i]) << i;
    }
    return m;
  };
  auto bmul = [this](std::uint16_t v) {
    std::uint16_t out = 0;
    for (int i = 0; i < 12; ++i) {
      out |= static_cast<std::uint16_t>(std::popcount(
                 static_cast<unsigned>(golay_b_rows_[i] & v)) & 1) << i;
    }
    return out;
  };

  const std::uint16_t x = mask_of(received, 0);   // systematic half
  const std::uint16_t y = mask_of(received, 12);  // parity half

  // Codeword is (m, Bm), H = [B | I], so the syndrome is s = Bx + y. Splitting
  // an error as e = (e1, e2) gives s = B e1 + e2 and q = Bs = e1 + B e2; any
  // weight <= 3 split lands in one of the four cases below.
  const std::uint16_t s = bmul(x) ^ y;
  std::uint16_t e1 = 0, e2 = 0;
  bool found = false;
  if (std::popcount(static_cast<unsigned>(s)) <= 3) {
    e2 = s;  // e1 empty
    found = true;
  }
  if (!found) {
    for (int i = 0; i < 12; ++i) {
      std::uint16_t d = s ^ golay_b_rows_[i];
      if (std::popcount(static_cast<unsigned>(d)) <= 2) {
        e1 = static_cast<std::uint16_t>(1u << i);
        e2 = d;
        found = true;
        break;
      }
    }
  }
  if (!found) {
    const std::uint16_t q = bmul(s);
    if (std::popcount(static_cast<unsigned>(q)) <= 3) {
      e1 = q;  // e2 empty
      found = true;
    } else {
      for (int i = 0; i < 12; ++i) {
        std::uint16_t d = q ^ golay_b_rows_[i];
        if (std::popcount(static_cast<unsigned>(d)) <= 2) {
          e1 = d;
          e2 = static_cast<std::uint16_t>(1u << i);
          found = true;
          break;
        }
      }
    }
  }

  DecodeResult result;
  result.message.resize(12);
  if (!found) {
    // weight >= 4 and outside every correctable coset: report the systematic
    // half unchanged so stream accounting can continue
    result.detected_uncorrectable = true;
    for (int i = 0; i < 12; ++i) {
      result.message[i] = static_cast<Bit>((x >> i) & 1);
    }
    return result;
  }
  const std::uint16_t corrected_x = x ^ e1;
  for (int i = 0; i < 12; ++i) {
    result.message[i] = static_cast<Bit>((corrected_x >> i) & 1);
  }
  result.corrected_bits = std::popcount(static_cast<unsigned>(e1)) +
                          std::popcount(static_cast<unsigned>(e2));
  return result;
}

LinearCode LinearCode::passthrough() {
  return LinearCode("none", 2, 2, 0, Decoder::Passthrough, BitMatrix::identity(2),
                    BitMatrix(0, 2));
}

LinearCode LinearCode::repetition(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("repetition length must be odd");
  }
  BitMatrix g(n, 1);
  for (int i = 0; i < n; ++i) {
    g.at(i, 0) = 1;
  }
  // parity checks x0 + xi for i >= 1
  BitMatrix h(n - 1, n);
  for (int i = 0; i + 1 < n; ++i) {
    h.at(i, 0) = 1;
    h.at(i, i + 1) = 1;
  }
  return LinearCode("rep" + std::to_string(n), n, 1, n / 2, Decoder::Majority, std::move(g),
                    std::move(h));
}

LinearCode LinearCode::hamming74() {
  // Parity bits at positions 1, 2, 4 (1-indexed); data at 3, 5, 6, 7. Check
  // row r covers the positions whose binary representation has bit r set, so
  // a single-bit error syndrome reads out its own position.
  BitMatrix h(3, 7);
  for (int pos = 1; pos <= 7; ++pos) {
    for (int row = 0; row < 3; ++row) {
      h.at(row, pos - 1) = static_cast<Bit>((pos >> row) & 1);
    }
  }
  const int data_pos[4] = {3, 5, 6, 7};
  BitMatrix g(7, 4);
  for (int j = 0; j < 4; ++j) {
    g.at(data_pos[j] - 1, j) = 1;
  }
  for (int row = 0; row < 3; ++row) {
    const int parity_pos = 1 << row;
    for (int j = 0; j < 4; ++j) {
      if ((data_pos[j] >> row) & 1) {
        g.at(parity_pos - 1, j) ^= 1;
      }
    }
  }
  return LinearCode("hamming74", 7, 4, 1, Decoder::Hamming, std::move(g), std::move(h));
}

LinearCode LinearCode::golay2412() {
  // B[i][j] = c[(i+j) mod 11] bordered by ones: symmetric with B*B = I.
  constexpr Bit c[11] = {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0};
  BitMatrix b(12, 12);
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) {
      b.at(i, j) = c[(i + j) % 11];
    }
    b.at(i, 11) = 1;
    b.at(11, i) = 1;
  }
  // generator stacks I over B: c = (m, Bm); parity check is [B | I]
  BitMatrix g(24, 12);
  BitMatrix h(12, 24);
  for (int i = 0; i < 12; ++i) {
    g.at(i, i) = 1;
    h.at(i, 12 + i) = 1;
    for (int j = 0; j < 12; ++j) {
      g.at(12 + i, j) = b.at(i, j);
      h.at(i, j) = b.at(i, j);
    }
  }
  LinearCode code("golay2412", 24, 12, 3, Decoder::Golay, std::move(g), std::move(h));
  for (int i = 0; i < 12; ++i) {
    std::uint16_t mask = 0;
    for (int j = 0; j < 12; ++j) {
      mask |= static_cast<std::uint16_t>(b.at(i, j)) << j;
    }
    code.golay_b_rows_[i] = mask;
  }
  return code;
}

const std::vector<LinearCode>& code_catalog() {
  static const std::vector<LinearCode> catalog = [] {
    std::vector<LinearCode> codes;
    codes.push_back(LinearCode::passthrough());
    codes.push_back(LinearCode::repetition(3));
    codes.push_back(LinearCode::repetition(5));
    codes.push_back(LinearCode::repetition(7));
    codes.push_back(LinearCode::hamming74());
    codes.push_back(LinearCode::golay2412());
    return codes;
  }();
  return catalog;
}

const LinearCode& find_code(std::string_view name) {
  for (const LinearCode& code : code_catalog()) {
    if (code.name() == name) {
      return code;
    }
  }
  throw std::invalid_argument("unknown code id: " + std::string(name));
}

}  // namespace sdcsim
