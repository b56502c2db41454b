#include "sdcsim/analytic.hpp"

#include <cmath>
#include <string>

namespace sdcsim {

namespace {

void check_noise(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("noise parameter outside [0, 1]: " + std::to_string(p));
  }
}

double xlog2(double x) {
  return x > 0.0 ? x * std::log2(x) : 0.0;
}

// Compensated (Kahan) accumulator; keeps the enumeration deterministic to
// well below the 1e-12 comparisons made against it.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double ber_uncoded(double p) {
  check_noise(p);
  return 2.0 * p / 3.0;
}

double ber_rep3_interleaved(double p) {
  check_noise(p);
  return (4.0 / 3.0) * p * p - (16.0 / 27.0) * p * p * p;
}

double ber_rep3_noninterleaved_reference(double p) {
  check_noise(p);
  return p / 3.0 + (7.0 / 18.0) * p * p + (2.0 / 27.0) * p * p * p;
}

double fec_success_reference(int n, double p) {
  if (n < 1) {
    throw std::domain_error("fec_success_reference: n must be >= 1");
  }
  check_noise(p);
  return std::pow(1.0 - p, n) + (2.0 * p / 3.0) * std::pow(1.0 - p, n - 1);
}

double capacity_sdc(double p) {
  check_noise(p);
  return 2.0 + xlog2(1.0 - p) + (p > 0.0 ? p * std::log2(p / 3.0) : 0.0);
}

double capacity_direct(double p) {
  check_noise(p);
  return 1.0 + xlog2(1.0 - p) + xlog2(p);
}

double ExhaustiveResult::monte_carlo_sigma(std::uint64_t message_bits) const {
  const double frames = static_cast<double>(message_bits) /
                        static_cast<double>(frame_message_bits);
  const double var_frame = mean_sq_frame_bit_errors - mean_frame_bit_errors * mean_frame_bit_errors;
  return std::sqrt(var_frame / frames) / static_cast<double>(frame_message_bits);
}

ExhaustiveResult exhaustive_ber(const LinearCode& code, PadPolicy pad, int depth,
                                const PauliChannelParams& params, const BitVec& frame_message) {
  const FramePlan plan = plan_frame(code, pad, depth);
  if (frame_message.size() != plan.message_alignment()) {
    throw std::invalid_argument("exhaustive_ber: frame message must be exactly " +
                                std::to_string(plan.message_alignment()) + " bits");
  }
  const int m = static_cast<int>(plan.symbols_per_block());
  if (2 * m >= 64 || (std::uint64_t{1} << (2 * m)) > kEnumerationBudget) {
    throw enumeration_budget_error("exhaustive_ber: 4^" + std::to_string(m) +
                                   " error patterns exceed the enumeration budget");
  }
  const std::uint64_t patterns = std::uint64_t{1} << (2 * m);

  const std::size_t k = static_cast<std::size_t>(plan.k);
  const std::size_t n = static_cast<std::size_t>(plan.n);
  const std::size_t cw_count = static_cast<std::size_t>(plan.cw_per_block());

  BitVec codewords;
  codewords.reserve(cw_count * n);
  for (std::size_t c = 0; c < cw_count; ++c) {
    const BitVec cw = code.encode(BitVec(frame_message.begin() + static_cast<std::ptrdiff_t>(c * k),
                                         frame_message.begin() + static_cast<std::ptrdiff_t>((c + 1) * k)));
    codewords.insert(codewords.end(), cw.begin(), cw.end());
  }
  const BitVec framed = frame_bits(codewords, code, pad, depth);

  const double prob[4] = {params.prob_by_index(0), params.prob_by_index(1),
                          params.prob_by_index(2), params.prob_by_index(3)};
  const Bit flip0[4] = {ErrorLabel::from_index(0).flips_b0(), ErrorLabel::from_index(1).flips_b0(),
                        ErrorLabel::from_index(2).flips_b0(), ErrorLabel::from_index(3).flips_b0()};
  const Bit flip1[4] = {ErrorLabel::from_index(0).flips_b1(), ErrorLabel::from_index(1).flips_b1(),
                        ErrorLabel::from_index(2).flips_b1(), ErrorLabel::from_index(3).flips_b1()};

  KahanSum weight_sum, bit_err_mean, bit_err_sq, cw_err_mean;
  BitVec rx(framed.size());
  BitVec rx_block(n);
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    double weight = 1.0;
    rx = framed;
    std::uint64_t digits = pattern;
    for (int s = 0; s < m; ++s, digits >>= 2) {
      const int idx = static_cast<int>(digits & 3);
      weight *= prob[idx];
      rx[2 * static_cast<std::size_t>(s)] ^= flip0[idx];
      rx[2 * static_cast<std::size_t>(s) + 1] ^= flip1[idx];
    }
    const BitVec stream = deframe_bits(rx, code, pad, depth);
    std::uint64_t wrong_bits = 0;
    std::uint64_t wrong_cw = 0;
    for (std::size_t c = 0; c < cw_count; ++c) {
      rx_block.assign(stream.begin() + static_cast<std::ptrdiff_t>(c * n),
                      stream.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
      const DecodeResult decoded = code.decode(rx_block);
      std::uint64_t wrong = 0;
      for (std::size_t j = 0; j < k; ++j) {
        wrong += decoded.message[j] != frame_message[c * k + j];
      }
      wrong_bits += wrong;
      wrong_cw += wrong != 0;
    }
    weight_sum.add(weight);
    bit_err_mean.add(weight * static_cast<double>(wrong_bits));
    bit_err_sq.add(weight * static_cast<double>(wrong_bits * wrong_bits));
    cw_err_mean.add(weight * static_cast<double>(wrong_cw));
  }

  ExhaustiveResult result;
  result.weight_sum = weight_sum.sum;
  result.patterns = patterns;
  result.frame_symbols = m;
  result.frame_codewords = static_cast<int>(cw_count);
  result.frame_message_bits = cw_count * k;
  result.mean_frame_bit_errors = bit_err_mean.sum;
  result.mean_sq_frame_bit_errors = bit_err_sq.sum;
  result.ber = bit_err_mean.sum / static_cast<double>(cw_count * k);
  result.cer = cw_err_mean.sum / static_cast<double>(cw_count);
  return result;
}

ExhaustiveResult exhaustive_ber(const LinearCode& code, PadPolicy pad, int depth,
                                const PauliChannelParams& params) {
  const FramePlan plan = plan_frame(code, pad, depth);
  return exhaustive_ber(code, pad, depth, params, BitVec(plan.message_alignment(), 0));
}

}  // namespace sdcsim
