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

#ifndef CUBEPACK_CODES_HPP_
#define CUBEPACK_CODES_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "cubepack/bitword.hpp"

namespace cubepack {

// A binary linear code, represented by a full-rank generator matrix.
// claimed_min_distance is what the construction promises; verify_structural
// and min_weight are the places that actually check such claims.
struct LinearCode {
  std::size_t length = 0;
  std::size_t dimension = 0;
  BinMatrix generator;
  unsigned claimed_min_distance = 0;
};

// Enumerations visit 2^dimension codewords; refuse beyond this by default.
inline constexpr uint32_t kDefaultEnumerationCap = 26;

// Validates that generator rows are independent (rank == rows) and wraps
// them up. Throws InvalidParameter otherwise.
LinearCode make_linear_code(BinMatrix generator, unsigned claimed_min_distance);

// Parity check matrix of the Hamming code of length 2^k - 1: column j
// (1-based) is the binary expansion of j, most significant bit in row 0.
// k in [2, 16].
BinMatrix hamming_parity_check(int k);

// The [2^k - 1, 2^k - 1 - k, 3] Hamming code, as the null space of
// hamming_parity_check(k).
LinearCode hamming_code(int k);

// Appends an even-parity coordinate: 0 if the word has even weight, 1 if odd.
BitWord extend_word(const BitWord& w);

// Extends every codeword by its parity bit. Minimum distance claims are
// bumped to the next even number (a Hamming code goes from 3 to 4).
LinearCode extend_code(const LinearCode& c);

// The Reed-Muller code RM(order, k) of length 2^k: generator rows are the
// evaluation vectors of all monomials in k boolean variables of degree at
// most `order`, evaluated over points t = 0 .. 2^k - 1 in binary counter
// order (variable i is bit i of t). Rows are ordered by (degree, monomial
// mask) ascending. Dimension is sum_{i<=order} C(k, i); the minimum
// distance claim is 2^(k - order).
LinearCode reed_muller(int order, int k);

// Visits all 2^dimension codewords, starting at the zero word, in Gray
// order: word(i) = XOR of generator rows selected by gray(i) = i ^ (i >> 1),
// so each step XORs exactly one row. The callback returns false to stop.
// Throws EnumerationRefused when dimension > cap.
void for_each_codeword(const LinearCode& c, uint32_t cap,
                       const std::function<bool(const BitWord&)>& fn);

// The slice [begin, end) of the same sequence. Shards of a partition visit
// exactly the words of the full enumeration, which is what makes long
// enumerations splittable across workers.
void for_each_codeword_range(const LinearCode& c, uint32_t cap, uint64_t begin,
                             uint64_t end,
                             const std::function<bool(const BitWord&)>& fn);

// Materialized enumeration, in the same order.
std::vector<BitWord> enumerate_codewords(const LinearCode& c, uint32_t cap);

// Smallest weight of a nonzero codeword, by full enumeration. Throws
// InvalidParameter for a zero-dimensional code (no nonzero codeword).
uint64_t min_weight(const LinearCode& c,
                    uint32_t cap = kDefaultEnumerationCap);

// True if every codeword of a is a codeword of b. Lengths must match.
bool subcode_of(const LinearCode& a, const LinearCode& b);

}  // namespace cubepack

#endif  // CUBEPACK_CODES_HPP_
