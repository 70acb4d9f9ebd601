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

// This translation unit is the only one compiled with -mavx2. Nothing here
// may be called unless the dispatcher has confirmed AVX2 support at runtime.

#include <bit>
#include <cstdint>

#include <immintrin.h>

#include "cubepack/kernels.hpp"

namespace cubepack::kernels {
namespace {

// Horizontal sum of four 64-bit lanes.
inline int64_t hsum_epi64(__m256i v) {
  alignas(32) int64_t lane[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lane), v);
  return lane[0] + lane[1] + lane[2] + lane[3];
}

int64_t sqdist_avx2(const int32_t* a, const int32_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i d = _mm256_sub_epi32(va, vb);
    // Entries are in [0, 2^16), so d*d < 2^32: the low 32 bits kept by
    // mullo are the exact square as an unsigned value. Widen unsigned.
    const __m256i sq = _mm256_mullo_epi32(d, d);
    const __m128i lo = _mm256_castsi256_si128(sq);
    const __m128i hi = _mm256_extracti128_si256(sq, 1);
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(lo));
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(hi));
  }
  int64_t total = hsum_epi64(acc);
  for (; i < n; ++i) {
    const int64_t d = int64_t{a[i]} - int64_t{b[i]};
    total += d * d;
  }
  return total;
}

int64_t min_sqdist_avx2(const int32_t* query, const int32_t* rows,
                        std::size_t count, std::size_t dim,
                        std::size_t* argmin) {
  // Rows are scanned in order and ties keep the earlier row, matching the
  // scalar kernel bit for bit.
  int64_t best = sqdist_avx2(query, rows, dim);
  std::size_t best_row = 0;
  for (std::size_t r = 1; r < count; ++r) {
    const int64_t d = sqdist_avx2(query, rows + r * dim, dim);
    if (d < best) {
      best = d;
      best_row = r;
    }
  }
  *argmin = best_row;
  return best;
}

void popcount_block_avx2(const uint64_t* in, uint8_t* out, std::size_t n) {
  // Per-byte popcount via a nibble lookup table, then _mm256_sad_epu8 sums
  // each group of eight bytes, which is exactly one input word.
  const __m256i lut = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                        _mm256_shuffle_epi8(lut, hi));
    const __m256i sums = _mm256_sad_epu8(cnt, zero);
    alignas(32) uint64_t lane[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane), sums);
    out[i + 0] = static_cast<uint8_t>(lane[0]);
    out[i + 1] = static_cast<uint8_t>(lane[1]);
    out[i + 2] = static_cast<uint8_t>(lane[2]);
    out[i + 3] = static_cast<uint8_t>(lane[3]);
  }
  for (; i < n; ++i) {
    out[i] = static_cast<uint8_t>(std::popcount(in[i]));
  }
}

}  // namespace

namespace detail {

const Kernels& avx2_impl() {
  static const Kernels k = {"avx2", sqdist_avx2, min_sqdist_avx2,
                            popcount_block_avx2};
  return k;
}

}  // namespace detail
}  // namespace cubepack::kernels
