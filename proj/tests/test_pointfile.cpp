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

#include "cubepack/pointfile.hpp"

#include <sstream>
#include <string>

#include <doctest.h>

#include "cubepack/errors.hpp"
#include "cubepack/packing.hpp"
#include "cubepack/points.hpp"

namespace {

using cubepack::DyadicPoint;
using cubepack::PointSet;

PointSet parse(const std::string& text) {
  std::istringstream in(text);
  return cubepack::read_point_file(in);
}

}  // namespace

TEST_CASE("point file golden bytes") {
  PointSet ps(2);
  ps.add(DyadicPoint{0, {0, 0}});
  ps.add(DyadicPoint{1, {1, 2}});

  std::ostringstream out;
  cubepack::write_point_file(out, ps);
  CHECK(out.str() ==
        "cubepack v1 dim=2 count=2\n"
        "0 0 0\n"
        "1 1 2\n");
}

TEST_CASE("round trip preserves every coordinate exactly") {
  const PointSet ps = cubepack::build_base(3);
  std::ostringstream out;
  cubepack::write_point_file(out, ps);

  const PointSet back = parse(out.str());
  REQUIRE(back.dim() == ps.dim());
  REQUIRE(back.size() == ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(back.get(i) == ps.get(i));
  }
}

TEST_CASE("reader normalizes reducible coordinates") {
  // 2/4 in every coordinate is 1/2; the reader accepts it and stores the
  // reduced form.
  const PointSet ps = parse(
      "cubepack v1 dim=2 count=1\n"
      "2 2 2\n");
  CHECK(ps.size() == 1);
  CHECK(ps.get(0) == DyadicPoint{1, {1, 1}});
}

TEST_CASE("reader rejects malformed input") {
  // Wrong magic.
  CHECK_THROWS_AS(parse("cubepak v1 dim=2 count=1\n0 0 0\n"),
                  cubepack::InvalidParameter);
  // Unsupported version tag.
  CHECK_THROWS_AS(parse("cubepack v2 dim=2 count=1\n0 0 0\n"),
                  cubepack::InvalidParameter);
  // Count disagrees with the body, both ways.
  CHECK_THROWS_AS(parse("cubepack v1 dim=2 count=2\n0 0 0\n"),
                  cubepack::InvalidParameter);
  CHECK_THROWS_AS(parse("cubepack v1 dim=2 count=1\n0 0 0\n0 1 1\n"),
                  cubepack::InvalidParameter);
  // Wrong number of coordinates on a line.
  CHECK_THROWS_AS(parse("cubepack v1 dim=3 count=1\n0 0 0\n"),
                  cubepack::InvalidParameter);
  CHECK_THROWS_AS(parse("cubepack v1 dim=2 count=1\n0 0 0 0\n"),
                  cubepack::InvalidParameter);
  // Coordinate outside the cube.
  CHECK_THROWS_AS(parse("cubepack v1 dim=2 count=1\n1 3 0\n"),
                  cubepack::InvalidParameter);
  // Denominator exponent beyond the supported range.
  CHECK_THROWS_AS(parse("cubepack v1 dim=2 count=1\n31 1 1\n"),
                  cubepack::InvalidParameter);
  // Junk in place of a number.
  CHECK_THROWS_AS(parse("cubepack v1 dim=2 count=1\n0 x 0\n"),
                  cubepack::InvalidParameter);
  // Trailing junk after the last point.
  CHECK_THROWS_AS(parse("cubepack v1 dim=2 count=1\n0 0 0\njunk\n"),
                  cubepack::InvalidParameter);
  // Empty input.
  CHECK_THROWS_AS(parse(""), cubepack::InvalidParameter);
  // Zero dimension.
  CHECK_THROWS_AS(parse("cubepack v1 dim=0 count=0\n"),
                  cubepack::InvalidParameter);
}

TEST_CASE("writer enforces its declared count") {
  std::ostringstream out;
  cubepack::PointFileWriter w(out, 2, 2);
  w.write(DyadicPoint{0, {1, 1}});
  CHECK_THROWS_AS(w.finish(), cubepack::InternalConsistencyFailure);
}

TEST_CASE("largest supported denominator survives a round trip") {
  PointSet ps(1);
  ps.add(DyadicPoint{30, {(1 << 30) - 1}});
  std::ostringstream out;
  cubepack::write_point_file(out, ps);
  const PointSet back = parse(out.str());
  CHECK(back.get(0) == DyadicPoint{30, {(1 << 30) - 1}});
}
