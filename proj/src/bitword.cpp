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
#include <bit>
#include <cassert>

#include "cubepack/errors.hpp"

namespace cubepack {

BitWord::BitWord(std::size_t length)
    : len_(length), words_((length + 63) / 64, 0) {}

BitWord BitWord::from_string(std::string_view bits) {
  BitWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i, true);
    } else if (bits[i] != '0') {
      throw InvalidParameter("invalid-parameter: bit string must be 0/1");
    }
  }
  return w;
}

bool BitWord::get(std::size_t i) const {
  assert(i < len_);
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitWord::set(std::size_t i, bool value) {
  assert(i < len_);
  const uint64_t mask = uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

void BitWord::xor_with(const BitWord& other) {
  assert(len_ == other.len_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
}

std::size_t BitWord::weight() const {
  std::size_t total = 0;
  for (uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitWord::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

std::string BitWord::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

std::strong_ordering BitWord::operator<=>(const BitWord& other) const {
  if (auto c = len_ <=> other.len_; c != 0) {
    return c;
  }
  // Lexicographic with coordinate 0 most significant. The first differing
  // coordinate is the lowest set bit of the XOR of the first differing word.
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const uint64_t d = words_[w] ^ other.words_[w];
    if (d != 0) {
      const uint64_t first = d & (~d + 1);
      return (words_[w] & first) != 0 ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
  rows_.assign(rows, BitWord(cols));
}

void BinMatrix::append_row(BitWord w) {
  if (rows_.empty() && cols_ == 0) {
    cols_ = w.length();
  }
  if (w.length() != cols_) {
    throw InvalidParameter("invalid-parameter: row length mismatch");
  }
  rows_.push_back(std::move(w));
}

BitWord BinMatrix::column(std::size_t c) const {
  BitWord col(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    col.set(r, get(r, c));
  }
  return col;
}

namespace {

// Row echelon form in place; returns the pivot column of each retained row.
std::vector<std::size_t> echelonize(std::vector<BitWord>& rows,
                                    std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols && next_row < rows.size(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && !rows[pivot].get(c)) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[next_row], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && rows[r].get(c)) {
        rows[r].xor_with(rows[next_row]);
      }
    }
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t BinMatrix::rank() const {
  std::vector<BitWord> work = rows_;
  return echelonize(work, cols_).size();
}

bool BinMatrix::row_space_contains(const BitWord& w) const {
  if (w.length() != cols_) {
    throw InvalidParameter("invalid-parameter: length mismatch");
  }
  std::vector<BitWord> work = rows_;
  const std::vector<std::size_t> pivots = echelonize(work, cols_);
  BitWord residue = w;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (residue.get(pivots[r])) {
      residue.xor_with(work[r]);
    }
  }
  return residue.is_zero();
}

std::vector<BitWord> BinMatrix::nullspace_basis() const {
  std::vector<BitWord> work = rows_;
  const std::vector<std::size_t> pivots = echelonize(work, cols_);

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) {
    is_pivot[c] = true;
  }

  // One basis vector per free column f: x[f] = 1, and each pivot column p of
  // row r gets x[p] = work[r][f] so that every row dots to zero.
  std::vector<BitWord> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    BitWord v(cols_);
    v.set(f, true);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (work[r].get(f)) {
        v.set(pivots[r], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitWord BinMatrix::multiply(const BitWord& x) const {
  if (x.length() != cols_) {
    throw InvalidParameter("invalid-parameter: length mismatch");
  }
  BitWord result(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    uint64_t acc = 0;
    const auto rw = rows_[r].words();
    const auto xw = x.words();
    for (std::size_t w = 0; w < rw.size(); ++w) {
      acc ^= rw[w] & xw[w];
    }
    result.set(r, (std::popcount(acc) & 1) != 0);
  }
  return result;
}

}  // namespace cubepack
