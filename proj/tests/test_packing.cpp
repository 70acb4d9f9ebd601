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

#include "cubepack/packing.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "cubepack/codes.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/points.hpp"

namespace {

using cubepack::BigInt;
using cubepack::DyadicPoint;
using cubepack::LayerSpec;
using cubepack::PointSet;

std::vector<DyadicPoint> collect(
    const std::function<bool(const cubepack::PointFn&)>& producer) {
  std::vector<DyadicPoint> out;
  producer([&](const DyadicPoint& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("base construction for k=2 is 16 vertices plus the center") {
  const PointSet ps = cubepack::build_base(2);
  CHECK(ps.dim() == 4);
  CHECK(ps.size() == 17);
  CHECK(cubepack::count_base(2) == 17);

  std::size_t vertices = 0;
  std::size_t halves = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const DyadicPoint p = ps.get(i);
    CHECK(p.is_normalized());
    CHECK(p.in_unit_cube());
    if (p.denom_exp == 0) {
      ++vertices;
    } else {
      CHECK(p.denom_exp == 1);
      CHECK(p.num == std::vector<int32_t>{1, 1, 1, 1});
      ++halves;
    }
  }
  CHECK(vertices == 16);
  CHECK(halves == 1);
}

TEST_CASE("base construction for k=3 follows the weight table") {
  const PointSet ps = cubepack::build_base(3);
  CHECK(ps.size() == 481);
  std::size_t by_exp[2] = {0, 0};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ++by_exp[ps.exp(i)];
  }
  CHECK(by_exp[0] == 256);  // fills of the zero codeword
  CHECK(by_exp[1] == 225);  // 14 weight-4 codewords * 16 fills + all-ones
}

TEST_CASE("streamed points per codeword count the off-support fills") {
  const auto eh = cubepack::extend_code(cubepack::hamming_code(3));
  for (const auto& w : cubepack::enumerate_codewords(eh, 26)) {
    const auto pts = collect([&](const cubepack::PointFn& fn) {
      return cubepack::stream_codeword_points(w, 1, 1, fn);
    });
    CHECK(pts.size() == std::size_t{1} << (8 - w.weight()));
    // Fills enumerate distinct points.
    std::set<std::string> keys;
    for (const DyadicPoint& p : pts) {
      keys.insert(cubepack::canonical_key(p));
    }
    CHECK(keys.size() == pts.size());
  }
}

TEST_CASE("augmented construction holds one quarter-scale point per word") {
  const PointSet aug = cubepack::build_augmented16();
  CHECK(aug.dim() == 16);
  CHECK(aug.size() == 2048);
  bool has_quarter = false;
  bool has_three_quarter = false;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    const DyadicPoint p = aug.get(i);
    CHECK(p.denom_exp == 2);
    for (int32_t v : p.num) {
      CHECK((v == 1 || v == 3));
    }
    has_quarter = has_quarter ||
                  p.num == std::vector<int32_t>(16, 1);
    has_three_quarter = has_three_quarter ||
                        p.num == std::vector<int32_t>(16, 3);
  }
  // The all-ones codeword gives all quarters; the zero word all
  // three-quarters.
  CHECK(has_quarter);
  CHECK(has_three_quarter);
}

TEST_CASE("order-0 refinement layer of dimension 16 has two points") {
  const LayerSpec spec = cubepack::make_layer_spec(0, 4);
  CHECK(spec.scale_exp == 2);
  CHECK(spec.multipliers == std::vector<int32_t>{1, 3});

  const PointSet layer = cubepack::build_rm_layer(spec);
  REQUIRE(layer.size() == 2);
  CHECK(layer.get(0).num == std::vector<int32_t>(16, 1));
  CHECK(layer.get(1).num == std::vector<int32_t>(16, 3));
  CHECK(cubepack::count_rm_layer_exact(spec) == 2);
  CHECK(cubepack::count_rm_layer_lower(spec) == 2);
}

TEST_CASE("layer counts for k=5 match the frozen values") {
  const LayerSpec spec = cubepack::make_layer_spec(1, 5);
  CHECK(cubepack::count_rm_layer_exact(spec) == 8126466);
  CHECK(cubepack::count_rm_layer_lower(spec) == 8126464);
  CHECK(cubepack::count_rm_layer_exact(spec) -
            cubepack::count_rm_layer_lower(spec) ==
        2);
}

TEST_CASE("general construction counts") {
  const auto rep4 = cubepack::count_general(4, cubepack::CountMode::kExact);
  CHECK(rep4.exact);
  CHECK(rep4.total == 1351363);
  REQUIRE(rep4.layers.size() == 2);
  CHECK(rep4.layers[0].order == 0);
  CHECK(rep4.layers[0].points == 2);
  CHECK(rep4.layers[1].is_base);
  CHECK(rep4.layers[1].points == 1351361);

  const auto rep5 = cubepack::count_general(5, cubepack::CountMode::kExact);
  CHECK(rep5.exact);
  CHECK(rep5.total == BigInt("28953490278787"));

  const auto rep5low =
      cubepack::count_general(5, cubepack::CountMode::kLowerBound);
  CHECK_FALSE(rep5low.exact);
  CHECK(rep5low.total == BigInt("28953490278785"));

  // k=7 has an order-3 layer whose code is too large to enumerate, so even
  // exact mode degrades to a lower bound and says so.
  const auto rep7 = cubepack::count_general(7, cubepack::CountMode::kExact);
  CHECK_FALSE(rep7.exact);
  bool saw_inexact_layer = false;
  for (const auto& layer : rep7.layers) {
    saw_inexact_layer = saw_inexact_layer || !layer.exact;
  }
  CHECK(saw_inexact_layer);
}

TEST_CASE("refinement layer orders step down from k-4 by twos") {
  CHECK(cubepack::general_layer_orders(4) == std::vector<int>{0});
  CHECK(cubepack::general_layer_orders(5) == std::vector<int>{1});
  CHECK(cubepack::general_layer_orders(6) == std::vector<int>{0, 2});
  CHECK(cubepack::general_layer_orders(7) == std::vector<int>{1, 3});
  CHECK(cubepack::general_layer_orders(8) == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(cubepack::general_layer_orders(3),
                  cubepack::InvalidParameter);
}

TEST_CASE("building the whole general packing for k=4") {
  const PointSet ps = cubepack::build_general(4);
  CHECK(ps.dim() == 16);
  CHECK(ps.size() == 1351363);
}

TEST_CASE("oversized builds are refused while streaming still works") {
  CHECK_THROWS_AS(cubepack::build_base(5), cubepack::MaterializationRefused);
  CHECK_THROWS_AS(cubepack::build_general(5),
                  cubepack::MaterializationRefused);

  std::size_t seen = 0;
  const bool completed = cubepack::stream_base(
      5, cubepack::kDefaultEnumerationCap, [&](const DyadicPoint& p) {
        CHECK(p.dim() == 32);
        CHECK(p.in_unit_cube());
        return ++seen < 10;
      });
  CHECK_FALSE(completed);  // the callback stopped the stream
  CHECK(seen == 10);
}

TEST_CASE("general build refuses when a layer cannot be enumerated") {
  // k=7: the order-3 layer count is only a lower bound, so a materialized
  // set cannot be sized truthfully.
  CHECK_THROWS_AS(cubepack::build_general(7, 1'000'000'000),
                  cubepack::EnumerationRefused);
}

TEST_CASE("layer spec validation") {
  CHECK_THROWS_AS(cubepack::make_layer_spec(1, 4),
                  cubepack::InvalidParameter);  // k - order odd
  CHECK_THROWS_AS(cubepack::make_layer_spec(4, 4),
                  cubepack::InvalidParameter);  // k - order = 0
  CHECK_THROWS_AS(cubepack::make_layer_spec(-1, 4),
                  cubepack::InvalidParameter);

  // k - order = 2 is a valid spec shape but not a refinement layer: that
  // scale is the base construction's own.
  const LayerSpec half = cubepack::make_layer_spec(2, 4);
  CHECK(half.scale_exp == 1);
  CHECK_THROWS_AS(
      cubepack::stream_rm_layer(half, 26,
                                [](const DyadicPoint&) { return true; }),
      cubepack::InvalidParameter);
}

TEST_CASE("every streamed general point is normalized and in the cube") {
  std::size_t seen = 0;
  cubepack::stream_general(4, 26, [&](const DyadicPoint& p) {
    CHECK(p.is_normalized());
    CHECK(p.in_unit_cube());
    // Sample broadly but keep the test quick.
    return ++seen < 5000;
  });
  CHECK(seen == 5000);
}
