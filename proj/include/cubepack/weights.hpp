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

#ifndef CUBEPACK_WEIGHTS_HPP_
#define CUBEPACK_WEIGHTS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cubepack/codes.hpp"

namespace cubepack {

// All counting in this library is exact; GMP supplies the integer and
// rational types behind these aliases.
using BigInt = mpz_class;
using BigRat = mpq_class;

// counts[j] = number of codewords of weight j, for j in [0, length].
struct WeightDistribution {
  std::size_t length = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
};

// Weight distribution W of the [2^k - 1, 2^k - 1 - k, 3] Hamming code via
// the recurrence (n = 2^k - 1)
//
//   j * W(j) = C(n, j-1) - W(j-1) - (n - j + 2) * W(j-2),  W(0) = 1, W(1) = 0,
//
// with every division checked exact. k in [2, 13].
WeightDistribution hamming_weights_recurrence(int k);

// The same distribution from the generating function
//
//   f(x) = [ (1+x)^n + n * (1-x) * (1-x^2)^((n-1)/2) ] / (n+1),
//
// using (1+x)^((n-1)/2) (1-x)^((n+1)/2) = (1-x) (1-x^2)^((n-1)/2) to avoid a
// polynomial product. W(j) is the coefficient of x^j.
WeightDistribution hamming_weights_closed(int k);

// Weight distribution V of the extended [2^k, 2^k - 1 - k, 4] Hamming code:
// V(j) = W(j) + W(j-1) for even j, zero for odd j. Before returning, the
// result is checked coefficient by coefficient against the closed form
//
//   g(x) = [ (1+x)^m + (1-x)^m + 2 (m-1) (1-x^2)^(m/2) ] / (2m),  m = 2^k,
//
// and disagreement raises InternalConsistencyFailure.
WeightDistribution extended_weights(int k);

// H(j) = 2^(2^k - j) * V(j): the number of packing points the base
// construction derives from the weight-j extended codewords (each codeword
// fixes j coordinates at 1/2 and leaves 2^k - j free binary choices).
std::vector<BigInt> points_per_weight(int k);

// Total size of the base packing in dimension 2^k:
//
//   sum_j H(j) = [ 3^(2^k) + 2 (2^k - 1) 3^(2^(k-1)) + 1 ] / 2^(k+1).
//
// Exact division checked.
BigInt base_count(int k);

// Number of minimum-weight (weight 2^(k-r)) codewords of RM(r, k):
//
//   2^r * prod_{i=0}^{k-r-1} (2^(k-i) - 1) / (2^(k-r-i) - 1),
//
// for 0 <= r <= k - 2. The division is performed once over the full
// products and checked exact.
BigInt rm_min_weight_count(int r, int k);

// Reference oracle: the weight distribution by enumerating every codeword.
// Uses a packed 64-bit Gray walk with the block popcount kernel when the
// code length allows it. Throws EnumerationRefused past the cap.
WeightDistribution weights_bruteforce(const LinearCode& c,
                                      uint32_t cap = kDefaultEnumerationCap);

}  // namespace cubepack

#endif  // CUBEPACK_WEIGHTS_HPP_
