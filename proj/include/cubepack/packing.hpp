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

#ifndef CUBEPACK_PACKING_HPP_
#define CUBEPACK_PACKING_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "cubepack/points.hpp"
#include "cubepack/weights.hpp"

namespace cubepack {

// Constructions of point sets in [0, 1]^(2^k) with pairwise distance >= 1.
//
// The base construction takes every codeword v of the extended Hamming code
// of length n = 2^k, puts 1/2 on the support of v, and runs every {0, 1}
// assignment over the other coordinates. Two points built from the same v
// differ by >= 1 in some integer coordinate; two points built from
// different codewords differ by 1/2 in at least d = 4 coordinates.
//
// A refinement adds layers: for a Reed-Muller code RM(r, k) with k - r
// even, support coordinates carry l / 2^m with m = (k - r) / 2 and odd
// multiplier l, so distinct layers live at distinct denominator scales and
// the minimum weight 2^(k-r) = 4^m of the code pays for the finer grid.

struct LayerSpec {
  int order = 0;      // Reed-Muller order r
  int k = 0;          // log2 of the cube dimension
  int scale_exp = 0;  // m = (k - r) / 2
  std::vector<int32_t> multipliers;  // odd l in [1, 2^m), ascending
};

// Validates 2 <= k, 0 <= r, and k - r even and positive. m = 1 is the base
// layer itself (multiplier 1 only); specs with larger m describe refinement
// layers.
LayerSpec make_layer_spec(int order, int k);

// Streaming consumers return false to stop; producers return false when
// stopped early, true when the stream completed.
using PointFn = std::function<bool(const DyadicPoint&)>;

// Points contributed by one codeword at one scale: multiplier / 2^scale_exp
// on the support of v, and all {0, 1} assignments over the off-support
// coordinates, emitted in binary counter order (the off-support coordinates,
// left to right, are the bits of the counter, most significant first). The
// zero codeword yields the 2^n cube vertices.
bool stream_codeword_points(const BitWord& v, uint32_t scale_exp,
                            int32_t multiplier, const PointFn& fn);

bool stream_base(int k, uint32_t enum_cap, const PointFn& fn);

// The 2048 points (1/4 on the support of v, 3/4 elsewhere) over all
// extended Hamming codewords of length 16. Together with the base set in
// dimension 16 they form a packing of 1351361 + 2048 = 1353409 points.
bool stream_augmented16(const PointFn& fn);

bool stream_rm_layer(const LayerSpec& spec, uint32_t enum_cap,
                     const PointFn& fn);

// Base first, then each refinement layer in ascending order.
bool stream_general(int k, uint32_t enum_cap, const PointFn& fn);

// Reed-Muller orders of the refinement layers of the general construction:
// r = k - 2*floor(k/2), ..., k - 6, k - 4 (step 2). Empty set would make no
// sense here, so k >= 4 is required.
std::vector<int> general_layer_orders(int k);

inline constexpr std::size_t kDefaultMaxPoints = 4'000'000;

// Exact point counts, computed without materializing anything.
BigInt count_base(int k);
BigInt count_rm_layer_exact(const LayerSpec& spec,
                            uint32_t enum_cap = kDefaultEnumerationCap);
// Counts only the minimum-weight codewords of the layer: a lower bound.
BigInt count_rm_layer_lower(const LayerSpec& spec);

enum class CountMode { kExact, kLowerBound };

struct LayerCount {
  int order = 0;
  bool is_base = false;
  BigInt points;
  bool exact = true;
};

struct CountReport {
  int k = 0;
  CountMode mode = CountMode::kExact;
  bool exact = true;  // false when any layer fell back to a lower bound
  BigInt total;
  std::vector<LayerCount> layers;
};

// Per-layer and total counts of the general construction. In exact mode a
// layer whose code is too large to enumerate falls back to its lower bound
// and clears the exact flag instead of failing.
CountReport count_general(int k, CountMode mode,
                          uint32_t enum_cap = kDefaultEnumerationCap);

// Materializers. They refuse (MaterializationRefused) when the exact count
// exceeds max_points; counting and streaming remain available.
PointSet build_base(int k, std::size_t max_points = kDefaultMaxPoints,
                    uint32_t enum_cap = kDefaultEnumerationCap);
PointSet build_augmented16();
PointSet build_rm_layer(const LayerSpec& spec,
                        std::size_t max_points = kDefaultMaxPoints,
                        uint32_t enum_cap = kDefaultEnumerationCap);
PointSet build_general(int k, std::size_t max_points = kDefaultMaxPoints,
                       uint32_t enum_cap = kDefaultEnumerationCap);

}  // namespace cubepack

#endif  // CUBEPACK_PACKING_HPP_
