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

#include "cubepack/weights.hpp"

#include <bit>
#include <cstddef>
#include <string>

#include "cubepack/errors.hpp"
#include "cubepack/kernels.hpp"

namespace cubepack {

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const BigInt& c : counts) {
    t += c;
  }
  return t;
}

namespace {

void check_k(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw InvalidParameter("invalid-parameter: k must be in [" +
                           std::to_string(lo) + ", " + std::to_string(hi) +
                           "]");
  }
}

BigInt checked_divexact(const BigInt& a, const BigInt& d, const char* what) {
  if (d == 0 || !mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    throw InternalConsistencyFailure(
        std::string("internal-consistency-failure: inexact division in ") +
        what);
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt binomial(unsigned long n, unsigned long j) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, j);
  return b;
}

// Coefficients of (1 + s*x)^n for s = +1 or -1.
std::vector<BigInt> signed_binomial_pow(int s, unsigned long n) {
  std::vector<BigInt> c(n + 1);
  for (unsigned long j = 0; j <= n; ++j) {
    c[j] = binomial(n, j);
    if (s < 0 && (j % 2) == 1) {
      c[j] = -c[j];
    }
  }
  return c;
}

// Coefficients of (1 - x^2)^m, degree 2m, only even powers populated.
std::vector<BigInt> one_minus_x2_pow(unsigned long m) {
  std::vector<BigInt> c(2 * m + 1);
  for (unsigned long i = 0; i <= m; ++i) {
    c[2 * i] = binomial(m, i);
    if ((i % 2) == 1) {
      c[2 * i] = -c[2 * i];
    }
  }
  return c;
}

}  // namespace

WeightDistribution hamming_weights_recurrence(int k) {
  check_k(k, 2, 13);
  const unsigned long n = (1ul << k) - 1;
  WeightDistribution wd;
  wd.length = n;
  wd.counts.assign(n + 1, BigInt(0));
  wd.counts[0] = 1;
  // wd.counts[1] stays 0: the code corrects single errors, so no weight-1
  // codeword exists. Everything past that follows from the recurrence.
  for (unsigned long j = 2; j <= n; ++j) {
    BigInt t = binomial(n, j - 1);
    t -= wd.counts[j - 1];
    t -= BigInt(static_cast<unsigned long>(n - j + 2)) * wd.counts[j - 2];
    wd.counts[j] = checked_divexact(t, BigInt(j), "weight recurrence");
  }
  return wd;
}

WeightDistribution hamming_weights_closed(int k) {
  check_k(k, 2, 13);
  const unsigned long n = (1ul << k) - 1;
  std::vector<BigInt> f = signed_binomial_pow(+1, n);
  // n * (1-x) * (1-x^2)^((n-1)/2): the factor q has degree n - 1, so the
  // product reaches degree n.
  const std::vector<BigInt> q = one_minus_x2_pow((n - 1) / 2);
  for (unsigned long j = 0; j <= n; ++j) {
    BigInt term = (j < q.size()) ? q[j] : BigInt(0);
    if (j >= 1) {
      term -= q[j - 1];
    }
    f[j] += BigInt(n) * term;
  }
  WeightDistribution wd;
  wd.length = n;
  wd.counts.resize(n + 1);
  const BigInt den(n + 1);
  for (unsigned long j = 0; j <= n; ++j) {
    wd.counts[j] = checked_divexact(f[j], den, "closed-form weights");
  }
  return wd;
}

WeightDistribution extended_weights(int k) {
  check_k(k, 2, 13);
  const unsigned long m = 1ul << k;
  const WeightDistribution w = hamming_weights_recurrence(k);

  WeightDistribution v;
  v.length = m;
  v.counts.assign(m + 1, BigInt(0));
  v.counts[0] = w.counts[0];
  for (unsigned long j = 2; j <= m; j += 2) {
    // Appending the parity coordinate pushes every odd-weight word up by
    // one, so weight class j collects the old classes j and j - 1.
    v.counts[j] = w.counts[j - 1];
    if (j <= w.length) {
      v.counts[j] += w.counts[j];
    }
  }

  // Independent route: coefficients of
  //   [ (1+x)^m + (1-x)^m + 2 (m-1) (1-x^2)^(m/2) ] / (2m).
  std::vector<BigInt> g = signed_binomial_pow(+1, m);
  const std::vector<BigInt> g_minus = signed_binomial_pow(-1, m);
  const std::vector<BigInt> q = one_minus_x2_pow(m / 2);
  const BigInt den(2 * m);
  for (unsigned long j = 0; j <= m; ++j) {
    g[j] += g_minus[j];
    g[j] += BigInt(2) * BigInt(m - 1) * q[j];
    g[j] = checked_divexact(g[j], den, "extended closed-form weights");
    if (g[j] != v.counts[j]) {
      throw InternalConsistencyFailure(
          "internal-consistency-failure: extended weight distributions "
          "disagree at weight " +
          std::to_string(j));
    }
  }
  return v;
}

std::vector<BigInt> points_per_weight(int k) {
  check_k(k, 2, 13);
  const unsigned long m = 1ul << k;
  const WeightDistribution v = extended_weights(k);
  std::vector<BigInt> h(m + 1);
  for (unsigned long j = 0; j <= m; ++j) {
    // A weight-j codeword pins j coordinates at 1/2; each of the remaining
    // m - j coordinates is free to sit at 0 or 1.
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, m - j);
    h[j] = scale * v.counts[j];
  }
  return h;
}

BigInt base_count(int k) {
  check_k(k, 2, 16);
  const unsigned long m = 1ul << k;
  BigInt t, half;
  mpz_ui_pow_ui(t.get_mpz_t(), 3, m);
  mpz_ui_pow_ui(half.get_mpz_t(), 3, m / 2);
  t += BigInt(2) * BigInt(m - 1) * half;
  t += 1;
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k) + 1);
  return checked_divexact(t, den, "base packing count");
}

BigInt rm_min_weight_count(int r, int k) {
  check_k(k, 2, 16);
  if (r < 0 || r > k - 2) {
    throw InvalidParameter("invalid-parameter: order must be in [0, k - 2]");
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i <= k - r - 1; ++i) {
    num *= (BigInt(1) << (k - i)) - 1;
    den *= (BigInt(1) << (k - r - i)) - 1;
  }
  num <<= r;
  return checked_divexact(num, den, "minimum-weight codeword count");
}

WeightDistribution weights_bruteforce(const LinearCode& c, uint32_t cap) {
  // A no-op range call performs the shared cap validation.
  for_each_codeword_range(c, cap, 0, 0,
                          [](const BitWord&) { return true; });

  std::vector<uint64_t> hist(c.length + 1, 0);
  const uint64_t total = uint64_t{1} << c.dimension;

  if (c.length <= 64) {
    // Packed fast path: one machine word per codeword, Gray steps, and the
    // block popcount kernel over batches.
    std::vector<uint64_t> rows(c.dimension);
    for (std::size_t r = 0; r < c.dimension; ++r) {
      rows[r] = c.generator.row(r).words().empty()
                    ? 0
                    : c.generator.row(r).words()[0];
    }
    constexpr std::size_t kBlock = 4096;
    std::vector<uint64_t> buf(kBlock);
    std::vector<uint8_t> pc(kBlock);
    const auto& kern = kernels::active();
    uint64_t word = 0;
    uint64_t i = 0;
    while (i < total) {
      std::size_t filled = 0;
      while (filled < kBlock && i < total) {
        if (i > 0) {
          word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        }
        buf[filled++] = word;
        ++i;
      }
      kern.popcount_block(buf.data(), pc.data(), filled);
      for (std::size_t t = 0; t < filled; ++t) {
        ++hist[pc[t]];
      }
    }
  } else {
    for_each_codeword(c, cap, [&hist](const BitWord& w) {
      ++hist[w.weight()];
      return true;
    });
  }

  WeightDistribution wd;
  wd.length = c.length;
  wd.counts.reserve(hist.size());
  for (uint64_t h : hist) {
    wd.counts.emplace_back(static_cast<unsigned long>(h));
  }
  return wd;
}

}  // namespace cubepack
