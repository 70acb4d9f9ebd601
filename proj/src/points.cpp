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

#include "cubepack/points.hpp"

#include <algorithm>

#include "cubepack/errors.hpp"

namespace cubepack {

bool DyadicPoint::is_normalized() const {
  if (denom_exp == 0) {
    return true;
  }
  return std::any_of(num.begin(), num.end(),
                     [](int32_t v) { return (v & 1) != 0; });
}

void DyadicPoint::normalize() {
  while (denom_exp > 0) {
    bool all_even = true;
    for (int32_t v : num) {
      if ((v & 1) != 0) {
        all_even = false;
        break;
      }
    }
    if (!all_even) {
      return;
    }
    for (int32_t& v : num) {
      v >>= 1;
    }
    --denom_exp;
  }
}

bool DyadicPoint::in_unit_cube() const {
  const int32_t hi = int32_t{1} << denom_exp;
  return std::all_of(num.begin(), num.end(),
                     [hi](int32_t v) { return v >= 0 && v <= hi; });
}

std::string canonical_key(const DyadicPoint& p) {
  if (!p.is_normalized()) {
    throw InvalidParameter("invalid-parameter: key of unnormalized point");
  }
  std::string key;
  key.reserve(4 + 4 * p.num.size());
  const auto put_be = [&key](uint32_t v) {
    key.push_back(static_cast<char>((v >> 24) & 0xff));
    key.push_back(static_cast<char>((v >> 16) & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
    key.push_back(static_cast<char>(v & 0xff));
  };
  put_be(p.denom_exp);
  for (int32_t v : p.num) {
    put_be(static_cast<uint32_t>(v));
  }
  return key;
}

PointSet::PointSet(uint32_t dim) : dim_(dim) {
  if (dim == 0) {
    throw InvalidParameter("invalid-parameter: dimension must be positive");
  }
}

void PointSet::reserve(std::size_t n) {
  exps_.reserve(n);
  coords_.reserve(n * dim_);
}

void PointSet::add(const DyadicPoint& p) {
  if (p.num.size() != dim_) {
    throw InvalidParameter("invalid-parameter: point dimension mismatch");
  }
  if (p.denom_exp > kMaxDenomExp) {
    throw InvalidParameter("invalid-parameter: denominator exponent too large");
  }
  if (!p.is_normalized()) {
    throw InvalidParameter("invalid-parameter: point not normalized");
  }
  if (!p.in_unit_cube()) {
    throw InvalidParameter("invalid-parameter: point outside the unit cube");
  }
  exps_.push_back(static_cast<uint8_t>(p.denom_exp));
  coords_.insert(coords_.end(), p.num.begin(), p.num.end());
}

DyadicPoint PointSet::get(std::size_t i) const {
  DyadicPoint p;
  p.denom_exp = exps_[i];
  p.num.assign(row(i), row(i) + dim_);
  return p;
}

uint8_t PointSet::max_exp() const {
  uint8_t m = 0;
  for (uint8_t e : exps_) {
    m = std::max(m, e);
  }
  return m;
}

}  // namespace cubepack
