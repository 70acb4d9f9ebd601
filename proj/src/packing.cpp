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

#include <bit>
#include <string>

#include "cubepack/errors.hpp"

namespace cubepack {

LayerSpec make_layer_spec(int order, int k) {
  if (k < 2 || k > 16 || order < 0) {
    throw InvalidParameter("invalid-parameter: need k in [2, 16], order >= 0");
  }
  const int gap = k - order;
  if (gap < 2 || (gap % 2) != 0) {
    throw InvalidParameter(
        "invalid-parameter: k - order must be even and positive");
  }
  LayerSpec spec;
  spec.order = order;
  spec.k = k;
  spec.scale_exp = gap / 2;
  for (int32_t l = 1; l < (int32_t{1} << spec.scale_exp); l += 2) {
    spec.multipliers.push_back(l);
  }
  return spec;
}

bool stream_codeword_points(const BitWord& v, uint32_t scale_exp,
                            int32_t multiplier, const PointFn& fn) {
  const std::size_t n = v.length();
  std::vector<std::size_t> off;
  off.reserve(n);
  DyadicPoint p;
  p.num.assign(n, 0);
  p.denom_exp = v.is_zero() ? 0 : scale_exp;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.get(i)) {
      p.num[i] = multiplier;
    } else {
      off.push_back(i);
    }
  }
  const int32_t high = int32_t{1} << p.denom_exp;
  const std::size_t t = off.size();

  if (!fn(p)) {  // the all-zeros assignment
    return false;
  }
  if (t == 0) {
    return true;
  }
  // Binary counter over the off-support coordinates, most significant bit
  // first. Incrementing flips the trailing ones to zero and one bit to one,
  // so each step touches only the low end of the counter.
  const uint64_t last =
      (t >= 64) ? ~uint64_t{0} : (uint64_t{1} << t) - 1;
  uint64_t c = 0;
  while (c != last) {
    ++c;
    const int z = std::countr_zero(c);
    for (int b = 0; b < z; ++b) {
      p.num[off[t - 1 - b]] = 0;
    }
    p.num[off[t - 1 - z]] = high;
    if (!fn(p)) {
      return false;
    }
  }
  return true;
}

bool stream_base(int k, uint32_t enum_cap, const PointFn& fn) {
  const LinearCode eh = extend_code(hamming_code(k));
  bool alive = true;
  for_each_codeword(eh, enum_cap, [&](const BitWord& v) {
    alive = stream_codeword_points(v, 1, 1, fn);
    return alive;
  });
  return alive;
}

bool stream_augmented16(const PointFn& fn) {
  const LinearCode eh = extend_code(hamming_code(4));
  DyadicPoint p;
  p.denom_exp = 2;
  p.num.assign(16, 0);
  bool alive = true;
  for_each_codeword(eh, kDefaultEnumerationCap, [&](const BitWord& v) {
    for (std::size_t i = 0; i < 16; ++i) {
      p.num[i] = v.get(i) ? 1 : 3;
    }
    alive = fn(p);
    return alive;
  });
  return alive;
}

bool stream_rm_layer(const LayerSpec& spec, uint32_t enum_cap,
                     const PointFn& fn) {
  if (spec.scale_exp < 2) {
    throw InvalidParameter(
        "invalid-parameter: refinement layers need k - order >= 4; the base "
        "construction already covers scale 1/2");
  }
  const LinearCode rm = reed_muller(spec.order, spec.k);
  bool alive = true;
  for_each_codeword(rm, enum_cap, [&](const BitWord& v) {
    if (v.is_zero()) {
      return true;  // vertices belong to the base layer, not here
    }
    for (int32_t l : spec.multipliers) {
      alive = stream_codeword_points(
          v, static_cast<uint32_t>(spec.scale_exp), l, fn);
      if (!alive) {
        return false;
      }
    }
    return true;
  });
  return alive;
}

bool stream_general(int k, uint32_t enum_cap, const PointFn& fn) {
  if (!stream_base(k, enum_cap, fn)) {
    return false;
  }
  for (int order : general_layer_orders(k)) {
    if (!stream_rm_layer(make_layer_spec(order, k), enum_cap, fn)) {
      return false;
    }
  }
  return true;
}

std::vector<int> general_layer_orders(int k) {
  if (k < 4 || k > 16) {
    throw InvalidParameter("invalid-parameter: k must be in [4, 16]");
  }
  std::vector<int> orders;
  for (int r = k - 2 * (k / 2); r <= k - 4; r += 2) {
    orders.push_back(r);
  }
  return orders;
}

BigInt count_base(int k) { return base_count(k); }

namespace {

BigInt pow2(unsigned long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

}  // namespace

BigInt count_rm_layer_exact(const LayerSpec& spec, uint32_t enum_cap) {
  const unsigned long n = 1ul << spec.k;
  const WeightDistribution wd =
      weights_bruteforce(reed_muller(spec.order, spec.k), enum_cap);
  // Each nonzero codeword of weight w yields one point per multiplier and
  // per off-support assignment: 2^(m-1) * 2^(n-w).
  BigInt total = 0;
  for (unsigned long w = 1; w <= n; ++w) {
    if (wd.counts[w] != 0) {
      total += wd.counts[w] * pow2(n - w);
    }
  }
  total *= pow2(static_cast<unsigned long>(spec.scale_exp) - 1);
  return total;
}

BigInt count_rm_layer_lower(const LayerSpec& spec) {
  const unsigned long n = 1ul << spec.k;
  const unsigned long min_w = 1ul << (spec.k - spec.order);
  return rm_min_weight_count(spec.order, spec.k) * pow2(n - min_w) *
         pow2(static_cast<unsigned long>(spec.scale_exp) - 1);
}

CountReport count_general(int k, CountMode mode, uint32_t enum_cap) {
  CountReport report;
  report.k = k;
  report.mode = mode;

  LayerCount base;
  base.order = k - 2;
  base.is_base = true;
  base.points = count_base(k);
  base.exact = true;
  report.total = base.points;

  for (int order : general_layer_orders(k)) {
    const LayerSpec spec = make_layer_spec(order, k);
    LayerCount lc;
    lc.order = order;
    if (mode == CountMode::kExact) {
      try {
        lc.points = count_rm_layer_exact(spec, enum_cap);
        lc.exact = true;
      } catch (const EnumerationRefused&) {
        lc.points = count_rm_layer_lower(spec);
        lc.exact = false;
      }
    } else {
      lc.points = count_rm_layer_lower(spec);
      lc.exact = false;
    }
    report.exact = report.exact && lc.exact;
    report.total += lc.points;
    report.layers.push_back(std::move(lc));
  }
  report.layers.push_back(std::move(base));
  return report;
}

namespace {

PointSet materialize(uint32_t dim, const BigInt& expected,
                     std::size_t max_points,
                     const std::function<bool(const PointFn&)>& producer) {
  if (expected > BigInt(static_cast<unsigned long>(max_points))) {
    throw MaterializationRefused(
        "materialization-refused: " + expected.get_str() +
        " points exceed the budget of " + std::to_string(max_points) +
        "; use counting or streaming instead");
  }
  PointSet ps(dim);
  ps.reserve(static_cast<std::size_t>(expected.get_ui()));
  producer([&ps](const DyadicPoint& p) {
    ps.add(p);
    return true;
  });
  if (BigInt(static_cast<unsigned long>(ps.size())) != expected) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: materialized " +
        std::to_string(ps.size()) + " points, expected " + expected.get_str());
  }
  return ps;
}

}  // namespace

PointSet build_base(int k, std::size_t max_points, uint32_t enum_cap) {
  return materialize(uint32_t{1} << k, count_base(k), max_points,
                     [k, enum_cap](const PointFn& fn) {
                       return stream_base(k, enum_cap, fn);
                     });
}

PointSet build_augmented16() {
  return materialize(16, BigInt(2048), kDefaultMaxPoints,
                     [](const PointFn& fn) {
                       return stream_augmented16(fn);
                     });
}

PointSet build_rm_layer(const LayerSpec& spec, std::size_t max_points,
                        uint32_t enum_cap) {
  return materialize(uint32_t{1} << spec.k,
                     count_rm_layer_exact(spec, enum_cap), max_points,
                     [&spec, enum_cap](const PointFn& fn) {
                       return stream_rm_layer(spec, enum_cap, fn);
                     });
}

PointSet build_general(int k, std::size_t max_points, uint32_t enum_cap) {
  const CountReport counts = count_general(k, CountMode::kExact, enum_cap);
  if (!counts.exact) {
    throw EnumerationRefused(
        "enumeration-refused: a refinement layer of k=" + std::to_string(k) +
        " is too large to enumerate");
  }
  return materialize(uint32_t{1} << k, counts.total, max_points,
                     [k, enum_cap](const PointFn& fn) {
                       return stream_general(k, enum_cap, fn);
                     });
}

}  // namespace cubepack
