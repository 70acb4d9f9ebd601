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

#include <bit>
#include <cstdint>

#include "cubepack/kernels.hpp"

namespace cubepack::kernels {
namespace {

int64_t sqdist_scalar(const int32_t* a, const int32_t* b, std::size_t n) {
  int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int64_t d = int64_t{a[i]} - int64_t{b[i]};
    acc += d * d;
  }
  return acc;
}

int64_t min_sqdist_scalar(const int32_t* query, const int32_t* rows,
                          std::size_t count, std::size_t dim,
                          std::size_t* argmin) {
  int64_t best = sqdist_scalar(query, rows, dim);
  std::size_t best_row = 0;
  for (std::size_t r = 1; r < count; ++r) {
    const int64_t d = sqdist_scalar(query, rows + r * dim, dim);
    if (d < best) {
      best = d;
      best_row = r;
    }
  }
  *argmin = best_row;
  return best;
}

void popcount_block_scalar(const uint64_t* in, uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<uint8_t>(std::popcount(in[i]));
  }
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k = {"scalar", sqdist_scalar, min_sqdist_scalar,
                            popcount_block_scalar};
  return k;
}

}  // namespace cubepack::kernels
