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

#ifndef CUBEPACK_KERNELS_HPP_
#define CUBEPACK_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

// Hot inner loops, written once as portable scalar code (the reference) and
// once with AVX2 intrinsics. A table of function pointers is selected at
// runtime from cpuid so the same binary runs on machines without AVX2.
//
// Contracts shared by both implementations:
//   * sqdist and min_sqdist require entries in [0, 2^16 - 1] (callers pass
//     nonnegative scaled coordinates), so each squared difference fits an
//     unsigned 32-bit lane exactly, and vectors of length n <= 2^20 so the
//     64-bit accumulator cannot wrap. Callers with larger coordinates must
//     take an arbitrary precision path instead of these kernels.
//   * Results are exact and identical across implementations, including the
//     index reported by min_sqdist (first row attaining the minimum).

namespace cubepack::kernels {

// Sum of squared differences of two int32 vectors of length n.
using SqdistFn = int64_t (*)(const int32_t* a, const int32_t* b, std::size_t n);

// Minimum over rows r of sqdist(query, rows + r * dim), writing the first
// row index that attains it to *argmin. count must be positive.
using MinSqdistFn = int64_t (*)(const int32_t* query, const int32_t* rows,
                                std::size_t count, std::size_t dim,
                                std::size_t* argmin);

// out[i] = popcount(in[i]) for i in [0, n). Values fit uint8 (<= 64).
using PopcountBlockFn = void (*)(const uint64_t* in, uint8_t* out,
                                 std::size_t n);

struct Kernels {
  const char* name;
  SqdistFn sqdist_i32;
  MinSqdistFn min_sqdist_i32;
  PopcountBlockFn popcount_block;
};

// Portable reference implementation. Always available.
const Kernels& scalar();

// AVX2 implementation, or nullptr when the CPU (or the build) lacks AVX2.
const Kernels* avx2();

// The implementation everything else calls. Defaults to the fastest
// supported one; the environment variable CUBEPACK_KERNELS=scalar forces
// the reference implementation.
const Kernels& active();

// Test hook: override the active table (pass nullptr to restore the default).
void set_active(const Kernels* k);

}  // namespace cubepack::kernels

#endif  // CUBEPACK_KERNELS_HPP_
