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

#ifndef CUBEPACK_POINTFILE_HPP_
#define CUBEPACK_POINTFILE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cubepack/points.hpp"

namespace cubepack {

// Text format for point sets, one point per line:
//
//   cubepack v1 dim=<n> count=<N>
//   <denom_exp> <num_1> ... <num_n>
//   ...
//
// Coordinate i of a point is num_i / 2^denom_exp. The reader validates
// ranges (0 <= num <= 2^denom_exp, denom_exp <= 30), normalizes each point,
// and rejects malformed input with InvalidParameter.

// Streams points into `out` without holding them; the count must be known
// up front because it lives in the header. finish() verifies that exactly
// `count` points were written.
class PointFileWriter {
 public:
  PointFileWriter(std::ostream& out, uint32_t dim, uint64_t count);
  void write(const DyadicPoint& p);
  void finish();

  uint64_t written() const { return written_; }

 private:
  std::ostream& out_;
  uint32_t dim_;
  uint64_t count_;
  uint64_t written_ = 0;
  std::string line_;
};

void write_point_file(std::ostream& out, const PointSet& ps);

PointSet read_point_file(std::istream& in);

}  // namespace cubepack

#endif  // CUBEPACK_POINTFILE_HPP_
