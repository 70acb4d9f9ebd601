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

#include "cubepack/bitword.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "cubepack/errors.hpp"

namespace {

using cubepack::BinMatrix;
using cubepack::BitWord;

std::string random_bits(std::mt19937_64& gen, std::size_t n) {
  std::string s(n, '0');
  for (auto& c : s) {
    c = (gen() & 1) ? '1' : '0';
  }
  return s;
}

}  // namespace

TEST_CASE("bitword string round trip and basic ops") {
  const BitWord w = BitWord::from_string("0110100");
  CHECK(w.length() == 7);
  CHECK(w.to_string() == "0110100");
  CHECK(w.weight() == 3);
  CHECK_FALSE(w.get(0));
  CHECK(w.get(1));
  CHECK(w.get(4));
  CHECK_FALSE(w.is_zero());
  CHECK(BitWord(9).is_zero());

  BitWord x = w;
  x.xor_with(w);
  CHECK(x.is_zero());
  x.set(6, true);
  CHECK(x.to_string() == "0000001");

  // Lengths beyond one machine word.
  std::mt19937_64 gen(5);
  for (std::size_t n : {std::size_t{63}, std::size_t{64}, std::size_t{65},
                        std::size_t{130}}) {
    const std::string s = random_bits(gen, n);
    const BitWord v = BitWord::from_string(s);
    CHECK(v.to_string() == s);
    CHECK(v.weight() ==
          static_cast<std::size_t>(std::count(s.begin(), s.end(), '1')));
  }
}

TEST_CASE("bitword ordering matches string ordering") {
  // Coordinate 0 is the most significant position.
  CHECK(BitWord::from_string("100") > BitWord::from_string("011"));
  CHECK(BitWord::from_string("010") < BitWord::from_string("011"));
  CHECK(BitWord::from_string("110") == BitWord::from_string("110"));

  std::mt19937_64 gen(17);
  for (std::size_t n : {std::size_t{10}, std::size_t{64}, std::size_t{70}}) {
    for (int rep = 0; rep < 200; ++rep) {
      const std::string sa = random_bits(gen, n);
      const std::string sb = random_bits(gen, n);
      const auto word_cmp =
          BitWord::from_string(sa) <=> BitWord::from_string(sb);
      const auto str_cmp = sa.compare(sb);
      CHECK((word_cmp < 0) == (str_cmp < 0));
      CHECK((word_cmp == 0) == (str_cmp == 0));
    }
  }
}

TEST_CASE("binmatrix rank") {
  BinMatrix id(0, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    BitWord r(4);
    r.set(i, true);
    id.append_row(r);
  }
  CHECK(id.rank() == 4);

  BinMatrix dep(0, 3);
  dep.append_row(BitWord::from_string("110"));
  dep.append_row(BitWord::from_string("011"));
  dep.append_row(BitWord::from_string("101"));  // sum of the first two
  CHECK(dep.rank() == 2);

  CHECK(BinMatrix(0, 5).rank() == 0);
}

TEST_CASE("binmatrix multiply and column") {
  BinMatrix m(0, 3);
  m.append_row(BitWord::from_string("110"));
  m.append_row(BitWord::from_string("011"));
  CHECK(m.column(0).to_string() == "10");
  CHECK(m.column(1).to_string() == "11");
  CHECK(m.column(2).to_string() == "01");

  // m * (1,1,0) = (parity of row & x) = (0, 1)
  CHECK(m.multiply(BitWord::from_string("110")).to_string() == "01");
  CHECK(m.multiply(BitWord::from_string("111")).to_string() == "00");
}

TEST_CASE("binmatrix multiply matches a naive dot product") {
  std::mt19937_64 gen(23);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t rows = 1 + gen() % 8;
    const std::size_t cols = 1 + gen() % 90;
    BinMatrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      m.append_row(BitWord::from_string(random_bits(gen, cols)));
    }
    const BitWord x = BitWord::from_string(random_bits(gen, cols));
    const BitWord got = m.multiply(x);
    for (std::size_t r = 0; r < rows; ++r) {
      bool parity = false;
      for (std::size_t c = 0; c < cols; ++c) {
        parity ^= m.get(r, c) && x.get(c);
      }
      CHECK(got.get(r) == parity);
    }
  }
}

TEST_CASE("nullspace basis spans exactly the kernel") {
  std::mt19937_64 gen(41);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t rows = 1 + gen() % 6;
    const std::size_t cols = 2 + gen() % 14;
    BinMatrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      m.append_row(BitWord::from_string(random_bits(gen, cols)));
    }
    const auto basis = m.nullspace_basis();
    CHECK(basis.size() == cols - m.rank());
    for (const BitWord& b : basis) {
      CHECK(m.multiply(b).is_zero());
    }
    // Basis independence: stacking them loses no rank.
    BinMatrix stacked(0, cols);
    for (const BitWord& b : basis) {
      stacked.append_row(b);
    }
    CHECK(stacked.rank() == basis.size());

    // Exhaustively cross-check membership for small widths: x is in the
    // kernel iff the basis spans it.
    if (cols <= 12) {
      std::size_t kernel_size = 0;
      for (uint64_t bits = 0; bits < (uint64_t{1} << cols); ++bits) {
        BitWord x(cols);
        for (std::size_t c = 0; c < cols; ++c) {
          x.set(c, (bits >> c) & 1);
        }
        const bool in_kernel = m.multiply(x).is_zero();
        kernel_size += in_kernel;
        CHECK(stacked.row_space_contains(x) == in_kernel);
      }
      CHECK(kernel_size == std::size_t{1} << basis.size());
    }
  }
}

TEST_CASE("row_space_contains accepts combinations and rejects outsiders") {
  std::mt19937_64 gen(59);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t rows = 1 + gen() % 6;
    const std::size_t cols = 4 + gen() % 60;
    BinMatrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      m.append_row(BitWord::from_string(random_bits(gen, cols)));
    }
    BitWord combo(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (gen() & 1) {
        combo.xor_with(m.row(r));
      }
    }
    CHECK(m.row_space_contains(combo));

    const BitWord candidate = BitWord::from_string(random_bits(gen, cols));
    BinMatrix extended = m;
    extended.append_row(candidate);
    CHECK(m.row_space_contains(candidate) == (extended.rank() == m.rank()));
  }
}

TEST_CASE("length mismatches are rejected") {
  BinMatrix m(0, 4);
  m.append_row(BitWord::from_string("1010"));
  CHECK_THROWS_AS(m.append_row(BitWord::from_string("101")),
                  cubepack::InvalidParameter);
  CHECK_THROWS_AS(m.row_space_contains(BitWord::from_string("10")),
                  cubepack::InvalidParameter);
  CHECK_THROWS_AS(m.multiply(BitWord::from_string("10")),
                  cubepack::InvalidParameter);
}
