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

#include "cubepack/codes.hpp"

#include <bit>
#include <string>

#include "cubepack/errors.hpp"

namespace cubepack {

LinearCode make_linear_code(BinMatrix generator, unsigned claimed_min_distance) {
  if (generator.rank() != generator.rows()) {
    throw InvalidParameter("invalid-parameter: generator rows are dependent");
  }
  LinearCode c;
  c.length = generator.cols();
  c.dimension = generator.rows();
  c.generator = std::move(generator);
  c.claimed_min_distance = claimed_min_distance;
  return c;
}

BinMatrix hamming_parity_check(int k) {
  if (k < 2 || k > 16) {
    throw InvalidParameter("invalid-parameter: k must be in [2, 16]");
  }
  const std::size_t n = (std::size_t{1} << k) - 1;
  BinMatrix h(static_cast<std::size_t>(k), n);
  for (std::size_t j = 1; j <= n; ++j) {
    for (int row = 0; row < k; ++row) {
      // Row 0 holds the most significant of the k bits of j.
      const bool bit = (j >> (k - 1 - row)) & 1u;
      h.set(static_cast<std::size_t>(row), j - 1, bit);
    }
  }
  return h;
}

LinearCode hamming_code(int k) {
  const BinMatrix h = hamming_parity_check(k);
  const std::vector<BitWord> basis = h.nullspace_basis();
  const std::size_t expected_dim = h.cols() - static_cast<std::size_t>(k);
  if (basis.size() != expected_dim) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: Hamming null space has wrong dimension");
  }
  BinMatrix g;
  for (const BitWord& row : basis) {
    if (!h.multiply(row).is_zero()) {
      throw InternalConsistencyFailure(
          "internal-consistency-failure: null space row fails parity checks");
    }
    g.append_row(row);
  }
  return make_linear_code(std::move(g), 3);
}

BitWord extend_word(const BitWord& w) {
  BitWord e(w.length() + 1);
  for (std::size_t i = 0; i < w.length(); ++i) {
    e.set(i, w.get(i));
  }
  e.set(w.length(), (w.weight() & 1) != 0);
  return e;
}

LinearCode extend_code(const LinearCode& c) {
  // Parity is linear, so extending the generator rows extends the whole
  // row space: ext(a) XOR ext(b) = ext(a XOR b).
  BinMatrix g;
  for (std::size_t r = 0; r < c.dimension; ++r) {
    g.append_row(extend_word(c.generator.row(r)));
  }
  const unsigned d = c.claimed_min_distance;
  return make_linear_code(std::move(g), d + (d % 2));
}

LinearCode reed_muller(int order, int k) {
  if (k < 1 || k > 16) {
    throw InvalidParameter("invalid-parameter: k must be in [1, 16]");
  }
  if (order < 0 || order > k) {
    throw InvalidParameter("invalid-parameter: order must be in [0, k]");
  }
  const std::size_t n = std::size_t{1} << k;
  // Monomial masks by (degree, mask) ascending; the mask's set bits are the
  // variables in the monomial, and the monomial evaluates to 1 at point t
  // exactly when t has all those bits set.
  BinMatrix g;
  for (int degree = 0; degree <= order; ++degree) {
    for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
      if (std::popcount(mask) != degree) {
        continue;
      }
      BitWord row(n);
      for (std::size_t t = 0; t < n; ++t) {
        row.set(t, (t & mask) == mask);
      }
      g.append_row(std::move(row));
    }
  }
  LinearCode c = make_linear_code(
      std::move(g), static_cast<unsigned>(std::size_t{1} << (k - order)));
  return c;
}

namespace {

void check_enumerable(const LinearCode& c, uint32_t cap) {
  if (c.dimension > 62) {
    throw EnumerationRefused(
        "enumeration-refused: dimension " + std::to_string(c.dimension) +
        " exceeds the 62-bit message counter");
  }
  if (c.dimension > cap) {
    throw EnumerationRefused(
        "enumeration-refused: 2^" + std::to_string(c.dimension) +
        " codewords exceeds cap 2^" + std::to_string(cap) +
        "; raise the cap to force this");
  }
}

}  // namespace

void for_each_codeword(const LinearCode& c, uint32_t cap,
                       const std::function<bool(const BitWord&)>& fn) {
  check_enumerable(c, cap);
  for_each_codeword_range(c, cap, 0, uint64_t{1} << c.dimension, fn);
}

void for_each_codeword_range(const LinearCode& c, uint32_t cap, uint64_t begin,
                             uint64_t end,
                             const std::function<bool(const BitWord&)>& fn) {
  check_enumerable(c, cap);
  const uint64_t total = uint64_t{1} << c.dimension;
  if (begin > end || end > total) {
    throw InvalidParameter("invalid-parameter: bad enumeration range");
  }
  if (begin == end) {
    return;
  }
  // Seed the walk with the codeword of message gray(begin), then XOR one
  // generator row per step: gray(i-1) and gray(i) differ exactly in bit
  // ctz(i).
  BitWord word(c.length);
  const uint64_t g0 = begin ^ (begin >> 1);
  for (std::size_t r = 0; r < c.dimension; ++r) {
    if ((g0 >> r) & 1u) {
      word.xor_with(c.generator.row(r));
    }
  }
  if (!fn(word)) {
    return;
  }
  for (uint64_t i = begin + 1; i < end; ++i) {
    word.xor_with(c.generator.row(static_cast<std::size_t>(
        std::countr_zero(i))));
    if (!fn(word)) {
      return;
    }
  }
}

std::vector<BitWord> enumerate_codewords(const LinearCode& c, uint32_t cap) {
  check_enumerable(c, cap);  // before the reserve, which would be 2^dim
  std::vector<BitWord> out;
  out.reserve(std::size_t{1} << c.dimension);
  for_each_codeword(c, cap, [&out](const BitWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

uint64_t min_weight(const LinearCode& c, uint32_t cap) {
  if (c.dimension == 0) {
    throw InvalidParameter(
        "invalid-parameter: min weight of a zero-dimensional code is "
        "undefined");
  }
  check_enumerable(c, cap);
  uint64_t best = c.length + 1;
  for_each_codeword(c, cap, [&best](const BitWord& w) {
    const uint64_t wt = w.weight();
    if (wt > 0 && wt < best) {
      best = wt;
    }
    return true;
  });
  return best;
}

bool subcode_of(const LinearCode& a, const LinearCode& b) {
  if (a.length != b.length) {
    throw InvalidParameter("invalid-parameter: code lengths differ");
  }
  for (std::size_t r = 0; r < a.dimension; ++r) {
    if (!b.generator.row_space_contains(a.generator.row(r))) {
      return false;
    }
  }
  return true;
}

}  // namespace cubepack
