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

#include "cubepack/kernels.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

namespace {

using cubepack::kernels::Kernels;

int64_t naive_sqdist(const int32_t* a, const int32_t* b, std::size_t n) {
  int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int64_t d = int64_t{a[i]} - int64_t{b[i]};
    acc += d * d;
  }
  return acc;
}

std::vector<int32_t> random_coords(std::mt19937_64& gen, std::size_t n) {
  std::vector<int32_t> v(n);
  for (auto& x : v) {
    x = static_cast<int32_t>(gen() % 65536);  // full contract range [0, 2^16)
  }
  return v;
}

void check_kernels_match(const Kernels& k) {
  std::mt19937_64 gen(20260815);
  // Lengths around the vector width expose tail handling.
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{7},
                        std::size_t{8}, std::size_t{9}, std::size_t{16},
                        std::size_t{31}, std::size_t{100}}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<int32_t> a = random_coords(gen, n);
      std::vector<int32_t> b = random_coords(gen, n);
      CHECK(k.sqdist_i32(a.data(), b.data(), n) ==
            naive_sqdist(a.data(), b.data(), n));
    }
  }

  // Extremes of the contract range: the largest squared difference per
  // coordinate is (2^16 - 1)^2, which must not wrap.
  std::vector<int32_t> lo(64, 0);
  std::vector<int32_t> hi(64, 65535);
  CHECK(k.sqdist_i32(lo.data(), hi.data(), 64) ==
        int64_t{64} * 65535 * 65535);
  CHECK(k.sqdist_i32(hi.data(), hi.data(), 64) == 0);
}

}  // namespace

TEST_CASE("scalar sqdist matches a naive loop") {
  check_kernels_match(cubepack::kernels::scalar());
}

TEST_CASE("scalar min_sqdist finds the first minimizing row") {
  const auto& k = cubepack::kernels::scalar();
  std::mt19937_64 gen(99);
  for (std::size_t dim : {std::size_t{1}, std::size_t{5}, std::size_t{16}}) {
    for (int rep = 0; rep < 10; ++rep) {
      const std::size_t count = 1 + gen() % 40;
      std::vector<int32_t> rows;
      for (std::size_t r = 0; r < count; ++r) {
        auto v = random_coords(gen, dim);
        rows.insert(rows.end(), v.begin(), v.end());
      }
      const std::vector<int32_t> q = random_coords(gen, dim);

      int64_t best = INT64_MAX;
      std::size_t best_r = 0;
      for (std::size_t r = 0; r < count; ++r) {
        const int64_t d = naive_sqdist(q.data(), rows.data() + r * dim, dim);
        if (d < best) {
          best = d;
          best_r = r;
        }
      }
      std::size_t argmin = ~std::size_t{0};
      CHECK(k.min_sqdist_i32(q.data(), rows.data(), count, dim, &argmin) ==
            best);
      CHECK(argmin == best_r);
    }
  }
}

TEST_CASE("min_sqdist tie-breaking keeps the earliest row") {
  const auto& k = cubepack::kernels::scalar();
  // Rows 1 and 3 are both at squared distance 1 from the query.
  const std::vector<int32_t> rows = {5, 5, 3, 4, 9, 9, 4, 3};
  const std::vector<int32_t> q = {4, 4};
  std::size_t argmin = 0;
  CHECK(k.min_sqdist_i32(q.data(), rows.data(), 4, 2, &argmin) == 1);
  CHECK(argmin == 1);
}

TEST_CASE("scalar popcount_block matches std::popcount") {
  const auto& k = cubepack::kernels::scalar();
  std::mt19937_64 gen(7);
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3},
                        std::size_t{4}, std::size_t{5}, std::size_t{32},
                        std::size_t{33}, std::size_t{4096}}) {
    std::vector<uint64_t> in(n);
    for (auto& w : in) {
      w = gen();
    }
    std::vector<uint8_t> out(n, 0xEE);
    k.popcount_block(in.data(), out.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(out[i] == std::popcount(in[i]));
    }
  }
}

TEST_CASE("avx2 kernels agree with scalar bit for bit") {
  const Kernels* a = cubepack::kernels::avx2();
  if (a == nullptr) {
    return;  // machine without AVX2; dispatch falls back to scalar
  }
  check_kernels_match(*a);

  const auto& s = cubepack::kernels::scalar();
  std::mt19937_64 gen(31337);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t dim = 1 + gen() % 40;
    const std::size_t count = 1 + gen() % 120;
    std::vector<int32_t> rows;
    for (std::size_t r = 0; r < count; ++r) {
      auto v = random_coords(gen, dim);
      // Plant occasional duplicate rows so ties actually occur.
      if (r > 0 && gen() % 4 == 0) {
        v.assign(rows.begin(), rows.begin() + static_cast<long>(dim));
      }
      rows.insert(rows.end(), v.begin(), v.end());
    }
    const std::vector<int32_t> q = random_coords(gen, dim);
    std::size_t arg_s = 0;
    std::size_t arg_a = 0;
    const int64_t min_s = s.min_sqdist_i32(q.data(), rows.data(), count, dim,
                                           &arg_s);
    const int64_t min_a = a->min_sqdist_i32(q.data(), rows.data(), count, dim,
                                            &arg_a);
    CHECK(min_s == min_a);
    CHECK(arg_s == arg_a);
  }

  std::vector<uint64_t> in(2000);
  for (auto& w : in) {
    w = gen();
  }
  std::vector<uint8_t> out_s(in.size()), out_a(in.size());
  s.popcount_block(in.data(), out_s.data(), in.size());
  a->popcount_block(in.data(), out_a.data(), in.size());
  CHECK(out_s == out_a);
}

TEST_CASE("kernel dispatch override") {
  const Kernels& before = cubepack::kernels::active();
  CHECK(std::string(before.name) != "");

  cubepack::kernels::set_active(&cubepack::kernels::scalar());
  CHECK(std::string(cubepack::kernels::active().name) == "scalar");

  cubepack::kernels::set_active(nullptr);
  CHECK(std::string(cubepack::kernels::active().name) ==
        std::string(before.name));

  // Absent the CUBEPACK_KERNELS override, the vector variant wins whenever
  // the CPU supports it.
  const char* env = std::getenv("CUBEPACK_KERNELS");
  if (cubepack::kernels::avx2() != nullptr && env == nullptr) {
    CHECK(std::string(cubepack::kernels::active().name) == "avx2");
  }
  if (env != nullptr && std::string(env) == "scalar") {
    CHECK(std::string(cubepack::kernels::active().name) == "scalar");
  }
}
