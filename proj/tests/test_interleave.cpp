#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "sdcsim/interleave.hpp"

using namespace sdcsim;

namespace {

BitVec bits(std::initializer_list<int> values) {
  BitVec out;
  for (int v : values) {
    out.push_back(static_cast<Bit>(v));
  }
  return out;
}

}  // namespace

TEST_CASE("depth-2 repetition example alternates codewords") {
  // two rep3 codewords {b0,b0,b0},{b1,b1,b1} -> {b0,b1,b0,b1,b0,b1}
  CHECK(interleave(bits({1, 1, 1, 0, 0, 0}), {3, 2}) == bits({1, 0, 1, 0, 1, 0}));
  CHECK(deinterleave(bits({1, 0, 1, 0, 1, 0}), {3, 2}) == bits({1, 1, 1, 0, 0, 0}));
}

TEST_CASE("depth 1 is the identity") {
  const BitVec payload = bits({1, 0, 1, 1, 0, 1, 0, 0});
  CHECK(interleave(payload, {4, 1}) == payload);
  CHECK(deinterleave(payload, {2, 1}) == payload);
}

TEST_CASE("position formula j*depth + i") {
  // {a,b,c,d, e,f,g,h} with n=4, D=2 -> {a,e,b,f,c,g,d,h}
  const BitVec in = bits({1, 1, 0, 1, 0, 0, 1, 0});  // a..h
  const BitVec expect = bits({1, 0, 1, 0, 0, 1, 1, 0});
  CHECK(interleave(in, {4, 2}) == expect);
}

TEST_CASE("roundtrip identity over random sizes and payloads") {
  RandomStream rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 12);
    const int d = 1 + static_cast<int>(rng.next_u64() % 5);
    const int blocks = 1 + static_cast<int>(rng.next_u64() % 4);
    BitVec payload(static_cast<std::size_t>(n * d * blocks));
    for (Bit& b : payload) {
      b = rng.next_bit();
    }
    const InterleaveConfig cfg{n, d};
    const BitVec permuted = interleave(payload, cfg);
    CHECK(deinterleave(permuted, cfg) == payload);
    // pure permutation: multiset of bits preserved
    CHECK(std::accumulate(permuted.begin(), permuted.end(), 0) ==
          std::accumulate(payload.begin(), payload.end(), 0));
  }
}

TEST_CASE("depth 2 puts the two bits of each symbol in distinct codewords") {
  // tag each bit with its codeword index instead of a bit value
  for (int n : {3, 4, 7, 8}) {
    std::vector<Bit> tagged;
    for (int cw = 0; cw < 2; ++cw) {
      for (int j = 0; j < n; ++j) {
        tagged.push_back(static_cast<Bit>(cw));
      }
    }
    const BitVec out = interleave(tagged, {n, 2});
    for (std::size_t i = 0; i + 1 < out.size(); i += 2) {
      CHECK(out[i] != out[i + 1]);
    }
  }
}

TEST_CASE("non-block-aligned input is rejected") {
  CHECK_THROWS_AS(interleave(bits({1, 0, 1}), {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(deinterleave(bits({1, 0, 1, 1, 0}), {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(interleave(bits({1}), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(interleave(bits({1}), {1, 0}), std::invalid_argument);
}
