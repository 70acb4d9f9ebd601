// Copyright 2026 The cubepack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cubepack/codes.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "cubepack/errors.hpp"

namespace {

using cubepack::BinMatrix;
using cubepack::BitWord;
using cubepack::LinearCode;

std::set<std::string> codeword_strings(const LinearCode& c) {
  std::set<std::string> out;
  for (const BitWord& w : cubepack::enumerate_codewords(c, 26)) {
    out.insert(w.to_string());
  }
  return out;
}

// Independent definition of the code: all length-n words that the parity
// check matrix annihilates. Only usable for tiny n, which is the point.
std::set<std::string> nullspace_strings(const BinMatrix& h) {
  std::set<std::string> out;
  const std::size_t n = h.cols();
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    BitWord w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w.set(i, (bits >> i) & 1);
    }
    if (h.multiply(w).is_zero()) {
      out.insert(w.to_string());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("hamming parity check columns enumerate 1..n") {
  const BinMatrix h = cubepack::hamming_parity_check(2);
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 3);
  // Column j holds the binary digits of j+1, most significant bit in row 0.
  CHECK(h.column(0).to_string() == "01");
  CHECK(h.column(1).to_string() == "10");
  CHECK(h.column(2).to_string() == "11");

  for (int k : {3, 4, 5}) {
    const BinMatrix hk = cubepack::hamming_parity_check(k);
    std::set<uint64_t> values;
    for (std::size_t j = 0; j < hk.cols(); ++j) {
      uint64_t v = 0;
      for (std::size_t r = 0; r < hk.rows(); ++r) {
        v = (v << 1) | hk.get(r, j);
      }
      values.insert(v);
    }
    CHECK(values.size() == hk.cols());
    CHECK(*values.begin() == 1);
    CHECK(*values.rbegin() == hk.cols());
  }
}

TEST_CASE("hamming codes match their parity-check nullspace") {
  for (int k : {2, 3}) {
    const LinearCode code = cubepack::hamming_code(k);
    CHECK(code.length == (std::size_t{1} << k) - 1);
    CHECK(code.dimension == code.length - static_cast<std::size_t>(k));
    CHECK(code.claimed_min_distance == 3);
    CHECK(codeword_strings(code) ==
          nullspace_strings(cubepack::hamming_parity_check(k)));
  }
  CHECK(codeword_strings(cubepack::hamming_code(2)) ==
        std::set<std::string>{"000", "111"});
}

TEST_CASE("extend_word appends overall parity") {
  const BitWord odd = BitWord::from_string("1101000");
  const BitWord even = BitWord::from_string("1100000");
  CHECK(cubepack::extend_word(odd).to_string() == "11010001");
  CHECK(cubepack::extend_word(even).to_string() == "11000000");
  CHECK(cubepack::extend_word(odd).weight() % 2 == 0);
}

TEST_CASE("extended hamming is an [8,4,4] code with even weights") {
  const LinearCode eh = cubepack::extend_code(cubepack::hamming_code(3));
  CHECK(eh.length == 8);
  CHECK(eh.dimension == 4);
  CHECK(eh.claimed_min_distance == 4);
  std::size_t weight4 = 0;
  for (const BitWord& w : cubepack::enumerate_codewords(eh, 26)) {
    CHECK(w.weight() % 2 == 0);
    weight4 += w.weight() == 4;
  }
  CHECK(weight4 == 14);
  CHECK(cubepack::min_weight(eh) == 4);
}

TEST_CASE("reed-muller parameters across the full order range") {
  for (int k : {1, 2, 3, 4}) {
    for (int r = 0; r <= k; ++r) {
      const LinearCode c = cubepack::reed_muller(r, k);
      CHECK(c.length == std::size_t{1} << k);
      std::size_t dim = 0;
      for (int i = 0; i <= r; ++i) {
        // binomial(k, i) small enough to compute directly
        std::size_t b = 1;
        for (int t = 0; t < i; ++t) {
          b = b * static_cast<std::size_t>(k - t) /
              static_cast<std::size_t>(t + 1);
        }
        dim += b;
      }
      CHECK(c.dimension == dim);
      CHECK(c.claimed_min_distance == (1u << (k - r)));
    }
  }
  // Order 0 is the repetition code.
  CHECK(codeword_strings(cubepack::reed_muller(0, 3)) ==
        std::set<std::string>{"00000000", "11111111"});
  // Full order covers every word.
  CHECK(cubepack::reed_muller(3, 3).dimension == 8);
  CHECK(cubepack::min_weight(cubepack::reed_muller(3, 3)) == 1);
}

TEST_CASE("reed-muller min weights match the claimed distances") {
  for (int k : {2, 3, 4}) {
    for (int r = 0; r <= k; ++r) {
      const LinearCode c = cubepack::reed_muller(r, k);
      CHECK(cubepack::min_weight(c) == c.claimed_min_distance);
    }
  }
  CHECK(cubepack::min_weight(cubepack::reed_muller(1, 5)) == 16);
}

TEST_CASE("reed-muller chain is nested") {
  for (int k : {2, 3, 4, 5, 6}) {
    for (int r = 0; r < k; ++r) {
      CHECK(cubepack::subcode_of(cubepack::reed_muller(r, k),
                                 cubepack::reed_muller(r + 1, k)));
    }
  }
  CHECK_FALSE(cubepack::subcode_of(cubepack::reed_muller(1, 3),
                                   cubepack::reed_muller(0, 3)));
}

TEST_CASE("extended hamming equals the order k-2 code up to one rotation") {
  // Moving the parity coordinate to the front turns one code into the
  // other: extended coordinate j+1 came from parity-check column value j+1,
  // which is the evaluation point j+1; the parity position becomes the
  // evaluation point 0.
  for (int k : {3, 4}) {
    const std::size_t n = std::size_t{1} << k;
    const LinearCode eh = cubepack::extend_code(cubepack::hamming_code(k));
    const LinearCode rm = cubepack::reed_muller(k - 2, k);
    std::set<std::string> mapped;
    for (const BitWord& w : cubepack::enumerate_codewords(eh, 26)) {
      BitWord p(n);
      p.set(0, w.get(n - 1));
      for (std::size_t j = 0; j + 1 < n; ++j) {
        p.set(j + 1, w.get(j));
      }
      mapped.insert(p.to_string());
    }
    CHECK(mapped == codeword_strings(rm));
  }
}

TEST_CASE("codeword enumeration ranges shard the full set") {
  const LinearCode c = cubepack::reed_muller(2, 4);
  const uint64_t total = uint64_t{1} << c.dimension;
  std::vector<std::string> full;
  cubepack::for_each_codeword(c, 26, [&](const BitWord& w) {
    full.push_back(w.to_string());
    return true;
  });
  CHECK(full.size() == total);
  CHECK(full.front() == std::string(c.length, '0'));

  std::vector<std::string> sharded;
  for (uint64_t begin : {uint64_t{0}, uint64_t{700}, uint64_t{1500}}) {
    const uint64_t end = begin == 0 ? 700 : (begin == 700 ? 1500 : total);
    cubepack::for_each_codeword_range(c, 26, begin, end,
                                      [&](const BitWord& w) {
                                        sharded.push_back(w.to_string());
                                        return true;
                                      });
  }
  std::sort(full.begin(), full.end());
  std::sort(sharded.begin(), sharded.end());
  CHECK(full == sharded);

  // Distinct codewords: the generator has full rank.
  CHECK(std::unique(full.begin(), full.end()) == full.end());
}

TEST_CASE("enumeration stops when the callback declines") {
  const LinearCode c = cubepack::reed_muller(2, 4);
  int seen = 0;
  cubepack::for_each_codeword(c, 26, [&](const BitWord&) {
    return ++seen < 5;
  });
  CHECK(seen == 5);
}

TEST_CASE("oversized enumerations are refused, not attempted") {
  const LinearCode big = cubepack::reed_muller(3, 6);  // dimension 42
  CHECK(big.dimension == 42);
  CHECK_THROWS_AS(cubepack::enumerate_codewords(big, 26),
                  cubepack::EnumerationRefused);
  CHECK_THROWS_AS(cubepack::min_weight(big, 26),
                  cubepack::EnumerationRefused);
  // Raising the cap past 62 still refuses: the Gray counter is 64-bit.
  CHECK_THROWS_AS(
      cubepack::for_each_codeword(cubepack::reed_muller(6, 8), 63,
                                  [](const BitWord&) { return true; }),
      cubepack::EnumerationRefused);
}

TEST_CASE("make_linear_code rejects dependent generators") {
  BinMatrix g(0, 4);
  g.append_row(BitWord::from_string("1100"));
  g.append_row(BitWord::from_string("0110"));
  g.append_row(BitWord::from_string("1010"));  // dependent
  CHECK_THROWS_AS(cubepack::make_linear_code(g, 2),
                  cubepack::InvalidParameter);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(cubepack::hamming_code(1), cubepack::InvalidParameter);
  CHECK_THROWS_AS(cubepack::hamming_code(17), cubepack::InvalidParameter);
  CHECK_THROWS_AS(cubepack::reed_muller(-1, 4), cubepack::InvalidParameter);
  CHECK_THROWS_AS(cubepack::reed_muller(5, 4), cubepack::InvalidParameter);
  CHECK_THROWS_AS(cubepack::reed_muller(0, 0), cubepack::InvalidParameter);
}
