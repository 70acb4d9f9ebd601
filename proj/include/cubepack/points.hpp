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

#ifndef CUBEPACK_POINTS_HPP_
#define CUBEPACK_POINTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cubepack {

// Coordinate denominators never need more than this many bits of scale in
// any construction here; the loader enforces it so scaled squared distances
// of file-loaded sets stay within comfortable integer ranges.
inline constexpr uint32_t kMaxDenomExp = 30;

// A point of the unit cube with dyadic rational coordinates: coordinate i
// is num[i] / 2^denom_exp, with 0 <= num[i] <= 2^denom_exp. Normalized form
// has denom_exp == 0 or at least one odd numerator, so equal points have
// equal representations.
struct DyadicPoint {
  uint32_t denom_exp = 0;
  std::vector<int32_t> num;

  std::size_t dim() const { return num.size(); }

  bool is_normalized() const;
  void normalize();

  // Every coordinate inside [0, 1]?
  bool in_unit_cube() const;

  bool operator==(const DyadicPoint&) const = default;
};

// Injective byte encoding of a normalized point (big-endian exponent, then
// big-endian numerators), usable as a map or sort key for duplicate
// detection. Requires the point to be normalized.
std::string canonical_key(const DyadicPoint& p);

// A flat, append-only container of points of one dimension. Numerators are
// stored row-major as int32 so pairwise distance scans run over contiguous
// memory; the per-point denominator exponent is stored separately.
class PointSet {
 public:
  explicit PointSet(uint32_t dim);

  uint32_t dim() const { return dim_; }
  std::size_t size() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }

  void reserve(std::size_t n);

  // Appends a copy of p; the point must be normalized, inside the cube,
  // of matching dimension, and within kMaxDenomExp.
  void add(const DyadicPoint& p);

  DyadicPoint get(std::size_t i) const;
  uint8_t exp(std::size_t i) const { return exps_[i]; }
  const int32_t* row(std::size_t i) const {
    return coords_.data() + i * dim_;
  }

  uint8_t max_exp() const;

 private:
  uint32_t dim_;
  std::vector<uint8_t> exps_;
  std::vector<int32_t> coords_;
};

}  // namespace cubepack

#endif  // CUBEPACK_POINTS_HPP_
