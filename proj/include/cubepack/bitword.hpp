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

#ifndef CUBEPACK_BITWORD_HPP_
#define CUBEPACK_BITWORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubepack {

// Fixed-length vector over GF(2), packed 64 bits per machine word.
// Bit i lives at words()[i / 64], bit position i % 64; unused high bits of
// the last word are always zero (operations maintain this so weight() and
// comparisons can work on whole words).
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t length);

  // Parses "0;1" text, leftmost character is coordinate 0.
  static BitWord from_string(std::string_view bits);

  std::size_t length() const { return len_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);

  // In-place XOR with a word of the same length.
  void xor_with(const BitWord& other);

  std::size_t weight() const;
  bool is_zero() const;

  std::span<const uint64_t> words() const { return words_; }

  std::string to_string() const;

  bool operator==(const BitWord&) const = default;
  std::strong_ordering operator<=>(const BitWord& other) const;

 private:
  std::size_t len_ = 0;
  std::vector<uint64_t> words_;
};

// Dense GF(2) matrix stored as rows of BitWord.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  BitWord& row(std::size_t i) { return rows_[i]; }
  const BitWord& row(std::size_t i) const { return rows_[i]; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  void append_row(BitWord w);

  // Column c as a BitWord of length rows().
  BitWord column(std::size_t c) const;

  std::size_t rank() const;

  // True if w is a GF(2) linear combination of this matrix's rows.
  bool row_space_contains(const BitWord& w) const;

  // Basis of {x : M x = 0}, one BitWord of length cols() per free column,
  // ordered by ascending free column index. Deterministic.
  std::vector<BitWord> nullspace_basis() const;

  // M * x over GF(2), where x has length cols(); result has length rows().
  BitWord multiply(const BitWord& x) const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitWord> rows_;
};

}  // namespace cubepack

#endif  // CUBEPACK_BITWORD_HPP_
