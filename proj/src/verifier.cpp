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

#include "cubepack/verifier.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "cubepack/codes.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/kernels.hpp"
#include "cubepack/packing.hpp"

namespace cubepack {
namespace {

using u128 = unsigned __int128;

BigInt u128_to_bigint(u128 v) {
  BigInt r(static_cast<unsigned long>(v >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(v);
  return r;
}

int resolve_threads(int threads) {
  if (threads > 0) {
    return threads;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// All numerators of a set brought to one denominator exponent E.
struct ScaledSet {
  uint32_t dim = 0;
  uint32_t scale_exp = 0;
  std::vector<int32_t> coords;

  const int32_t* row(std::size_t i) const { return coords.data() + i * dim; }
};

ScaledSet scale_set(const PointSet& ps, uint32_t e) {
  ScaledSet s;
  s.dim = ps.dim();
  s.scale_exp = e;
  s.coords.resize(ps.size() * ps.dim());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const int32_t* src = ps.row(i);
    int32_t* dst = s.coords.data() + i * s.dim;
    const uint32_t shift = e - ps.exp(i);
    for (uint32_t c = 0; c < s.dim; ++c) {
      dst[c] = src[c] << shift;
    }
  }
  return s;
}

// The integer kernels need every scaled entry below 2^16; numerators reach
// 2^E, so E <= 15 qualifies. Larger scales take the 128-bit scalar path.
bool kernel_eligible(uint32_t e) { return e <= 15; }

u128 sqdist_wide(const int32_t* a, const int32_t* b, std::size_t n) {
  u128 acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int64_t d = int64_t{a[i]} - int64_t{b[i]};
    acc += static_cast<u128>(d * d);
  }
  return acc;
}

// Running minimum with deterministic tie-breaking on (value, i, j).
struct MinHit {
  u128 value = ~u128{0};
  uint64_t i = 0;
  uint64_t j = 0;

  void offer(u128 v, uint64_t pi, uint64_t pj) {
    if (v < value || (v == value && (pi < i || (pi == i && pj < j)))) {
      value = v;
      i = pi;
      j = pj;
    }
  }
  void merge(const MinHit& o) { offer(o.value, o.i, o.j); }
};

DistanceReport finish_report(std::string mode, uint64_t pairs, uint32_t e,
                             const MinHit& hit) {
  DistanceReport r;
  r.mode = std::move(mode);
  r.pairs_checked = pairs;
  r.scale_exp = e;
  r.min_scaled_sq = u128_to_bigint(hit.value);
  r.argmin_i = hit.i;
  r.argmin_j = hit.j;
  const u128 threshold = u128{1} << (2 * e);
  r.passed = hit.value >= threshold;
  return r;
}

void run_sharded(int threads, const std::function<void(int, int)>& body) {
  if (threads <= 1) {
    body(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back(body, t, threads);
  }
  for (auto& th : pool) {
    th.join();
  }
}

uint64_t bounded_draw(std::mt19937_64& gen, uint64_t n) {
  // Rejection sampling keeps the mapping exactly uniform and, unlike the
  // standard library distributions, identical on every implementation.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  uint64_t r = gen();
  while (r >= limit) {
    r = gen();
  }
  return r % n;
}

struct IndexPair {
  uint64_t i;
  uint64_t j;
};

DistanceReport run_pair_list(const char* mode, const ScaledSet& sa,
                             const ScaledSet& sb,
                             const std::vector<IndexPair>& pairs, uint64_t seed,
                             int threads) {
  const bool fast = kernel_eligible(sa.scale_exp);
  const auto& kern = kernels::active();
  std::vector<MinHit> local(static_cast<std::size_t>(threads));
  run_sharded(threads, [&](int t, int nt) {
    // Ties across shards resolve on the first drawn pair: track the pair
    // index, not (i, j), while scanning.
    MinHit h;
    for (std::size_t x = t; x < pairs.size();
         x += static_cast<std::size_t>(nt)) {
      const u128 d =
          fast ? static_cast<u128>(kern.sqdist_i32(
                     sa.row(pairs[x].i), sb.row(pairs[x].j), sa.dim))
               : sqdist_wide(sa.row(pairs[x].i), sb.row(pairs[x].j), sa.dim);
      h.offer(d, x, 0);
    }
    local[static_cast<std::size_t>(t)] = h;
  });
  MinHit best;
  for (const MinHit& h : local) {
    best.merge(h);
  }
  MinHit reported;
  reported.value = best.value;
  reported.i = pairs[best.i].i;
  reported.j = pairs[best.i].j;
  DistanceReport r =
      finish_report(mode, pairs.size(), sa.scale_exp, reported);
  r.has_seed = true;
  r.seed = seed;
  return r;
}

}  // namespace

std::pair<BigInt, uint32_t> scaled_sqdist(const DyadicPoint& p,
                                          const DyadicPoint& q) {
  if (p.dim() != q.dim()) {
    throw InvalidParameter("invalid-parameter: dimension mismatch");
  }
  const uint32_t e = std::max(p.denom_exp, q.denom_exp);
  if (e <= 30) {
    const uint32_t sp = e - p.denom_exp;
    const uint32_t sq = e - q.denom_exp;
    u128 acc = 0;
    for (std::size_t c = 0; c < p.num.size(); ++c) {
      const int64_t d = (int64_t{p.num[c]} << sp) - (int64_t{q.num[c]} << sq);
      acc += static_cast<u128>(d * d);
    }
    return {u128_to_bigint(acc), e};
  }
  BigInt acc = 0;
  for (std::size_t c = 0; c < p.num.size(); ++c) {
    BigInt d = BigInt(p.num[c]) << (e - p.denom_exp);
    d -= BigInt(q.num[c]) << (e - q.denom_exp);
    acc += d * d;
  }
  return {acc, e};
}

DistanceReport verify_exhaustive(const PointSet& ps, std::size_t max_points,
                                 int threads) {
  if (ps.size() < 2) {
    // No pairs exist, so the spacing requirement holds vacuously. Consumers
    // can tell from pairs_checked == 0 that no minimum was attained.
    DistanceReport rep;
    rep.mode = "exhaustive";
    rep.scale_exp = ps.max_exp();
    rep.passed = true;
    return rep;
  }
  if (ps.size() > max_points) {
    throw VerificationRefused(
        "verification-refused: " + std::to_string(ps.size()) +
        " points make " + std::to_string(ps.size() * (ps.size() - 1) / 2) +
        " pairs; use sampled or structural mode");
  }
  const int nt = resolve_threads(threads);
  const uint32_t e = ps.max_exp();
  const ScaledSet s = scale_set(ps, e);
  const std::size_t n = ps.size();
  const bool fast = kernel_eligible(e);
  const auto& kern = kernels::active();

  std::vector<MinHit> local(static_cast<std::size_t>(nt));
  run_sharded(nt, [&](int t, int num) {
    MinHit h;
    for (std::size_t i = t; i + 1 < n; i += static_cast<std::size_t>(num)) {
      if (fast) {
        std::size_t arg = 0;
        const int64_t d =
            kern.min_sqdist_i32(s.row(i), s.row(i + 1), n - i - 1, s.dim,
                                &arg);
        h.offer(static_cast<u128>(d), i, i + 1 + arg);
      } else {
        for (std::size_t j = i + 1; j < n; ++j) {
          h.offer(sqdist_wide(s.row(i), s.row(j), s.dim), i, j);
        }
      }
    }
    local[static_cast<std::size_t>(t)] = h;
  });
  MinHit best;
  for (const MinHit& h : local) {
    best.merge(h);
  }
  return finish_report("exhaustive",
                       static_cast<uint64_t>(n) * (n - 1) / 2, e, best);
}

DistanceReport verify_sampled(const PointSet& ps, uint64_t num_pairs,
                              uint64_t seed, int threads) {
  if (ps.size() < 2) {
    throw InvalidParameter("invalid-parameter: need at least two points");
  }
  if (num_pairs == 0) {
    throw InvalidParameter("invalid-parameter: need at least one pair");
  }
  const uint32_t e = ps.max_exp();
  const ScaledSet s = scale_set(ps, e);

  // Pairs are drawn up front, single threaded, so the sample depends on the
  // seed alone.
  std::mt19937_64 gen(seed);
  std::vector<IndexPair> pairs(num_pairs);
  for (IndexPair& p : pairs) {
    p.i = bounded_draw(gen, ps.size());
    p.j = bounded_draw(gen, ps.size() - 1);
    if (p.j >= p.i) {
      ++p.j;
    }
  }
  return run_pair_list("sampled", s, s, pairs, seed, resolve_threads(threads));
}

DistanceReport verify_sampled_cross(const PointSet& a, const PointSet& b,
                                    uint64_t num_pairs, uint64_t seed,
                                    int threads) {
  if (a.dim() != b.dim()) {
    throw InvalidParameter("invalid-parameter: dimension mismatch");
  }
  if (a.empty() || b.empty()) {
    throw InvalidParameter("invalid-parameter: empty point set");
  }
  if (num_pairs == 0) {
    throw InvalidParameter("invalid-parameter: need at least one pair");
  }
  const uint32_t e = std::max(a.max_exp(), b.max_exp());
  const ScaledSet sa = scale_set(a, e);
  const ScaledSet sb = scale_set(b, e);

  std::mt19937_64 gen(seed);
  std::vector<IndexPair> pairs(num_pairs);
  for (IndexPair& p : pairs) {
    p.i = bounded_draw(gen, a.size());
    p.j = bounded_draw(gen, b.size());
  }
  return run_pair_list("sampled-cross", sa, sb, pairs, seed,
                       resolve_threads(threads));
}

DistanceReport verify_all_cross(const PointSet& a, const PointSet& b,
                                int threads) {
  if (a.dim() != b.dim()) {
    throw InvalidParameter("invalid-parameter: dimension mismatch");
  }
  if (a.empty() || b.empty()) {
    throw InvalidParameter("invalid-parameter: empty point set");
  }
  const uint64_t pair_count =
      static_cast<uint64_t>(a.size()) * static_cast<uint64_t>(b.size());
  if (pair_count > (uint64_t{1} << 33)) {
    throw VerificationRefused(
        "verification-refused: " + std::to_string(pair_count) +
        " cross pairs; use sampled-cross mode");
  }
  const int nt = resolve_threads(threads);
  const uint32_t e = std::max(a.max_exp(), b.max_exp());
  const ScaledSet sa = scale_set(a, e);
  const ScaledSet sb = scale_set(b, e);
  const bool fast = kernel_eligible(e);
  const auto& kern = kernels::active();

  std::vector<MinHit> local(static_cast<std::size_t>(nt));
  run_sharded(nt, [&](int t, int num) {
    MinHit h;
    for (std::size_t i = t; i < a.size(); i += static_cast<std::size_t>(num)) {
      if (fast) {
        std::size_t arg = 0;
        const int64_t d = kern.min_sqdist_i32(sa.row(i), sb.row(0), b.size(),
                                              sa.dim, &arg);
        h.offer(static_cast<u128>(d), i, arg);
      } else {
        for (std::size_t j = 0; j < b.size(); ++j) {
          h.offer(sqdist_wide(sa.row(i), sb.row(j), sa.dim), i, j);
        }
      }
    }
    local[static_cast<std::size_t>(t)] = h;
  });
  MinHit best;
  for (const MinHit& h : local) {
    best.merge(h);
  }
  return finish_report("cross-all", pair_count, e, best);
}

uint64_t check_no_duplicates(const PointSet& ps) {
  std::vector<uint64_t> idx(ps.size());
  std::iota(idx.begin(), idx.end(), 0);
  const uint32_t dim = ps.dim();
  const auto less = [&ps, dim](uint64_t a, uint64_t b) {
    if (ps.exp(a) != ps.exp(b)) {
      return ps.exp(a) < ps.exp(b);
    }
    const int32_t* ra = ps.row(a);
    const int32_t* rb = ps.row(b);
    for (uint32_t c = 0; c < dim; ++c) {
      if (ra[c] != rb[c]) {
        return ra[c] < rb[c];
      }
    }
    return false;
  };
  std::sort(idx.begin(), idx.end(), less);
  uint64_t dups = 0;
  for (std::size_t x = 1; x < idx.size(); ++x) {
    if (!less(idx[x - 1], idx[x]) && !less(idx[x], idx[x - 1])) {
      ++dups;
    }
  }
  return dups;
}

namespace {

// Establishes that the extended Hamming code in dimension 2^k has minimum
// weight exactly 4 without enumerating it: distinct nonzero parity-check
// columns rule out weights 1 and 2, the parity coordinate rules out odd
// weights, and the dependency among the columns valued 1, 2, 3 exhibits a
// weight-4 word.
LayerFacts extended_hamming_facts_structural(int k) {
  const BinMatrix h = hamming_parity_check(k);
  const std::size_t n = h.cols();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t j = 0; j < n; ++j) {
    uint64_t value = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      value = (value << 1) | (h.get(r, j) ? 1u : 0u);
    }
    if (value == 0 || value > n || seen[value]) {
      throw InternalConsistencyFailure(
          "internal-consistency-failure: parity-check columns not distinct "
          "nonzero");
    }
    seen[value] = true;
  }
  // Columns valued 1, 2, 3 XOR to zero; they sit at positions 0, 1, 2.
  BitWord witness(n);
  witness.set(0, true);
  witness.set(1, true);
  witness.set(2, true);
  if (!h.multiply(witness).is_zero()) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: weight-4 witness fails parity checks");
  }
  if (extend_word(witness).weight() != 4) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: witness does not extend to weight 4");
  }
  LayerFacts f;
  f.order = k - 2;
  f.scale_exp = 1;
  f.is_base = true;
  f.min_weight = 4;
  f.verified = true;
  f.method = "parity-check structure";
  return f;
}

uint64_t rm_dimension(int order, int k) {
  uint64_t dim = 0;
  BigInt b;
  for (int i = 0; i <= order; ++i) {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(i));
    dim += b.get_ui();
  }
  return dim;
}

}  // namespace

std::vector<LayerFacts> establish_layer_facts(
    int k, const std::vector<int>& refinement_orders, uint32_t enum_cap) {
  std::vector<LayerFacts> facts;

  const std::size_t eh_dim = (std::size_t{1} << k) - 1 - k;
  if (eh_dim <= enum_cap && eh_dim <= 62) {
    const uint64_t mw = min_weight(extend_code(hamming_code(k)), enum_cap);
    if (mw != 4) {
      throw InternalConsistencyFailure(
          "internal-consistency-failure: extended Hamming minimum weight " +
          std::to_string(mw));
    }
    LayerFacts f;
    f.order = k - 2;
    f.scale_exp = 1;
    f.is_base = true;
    f.min_weight = 4;
    f.verified = true;
    f.method = "enumeration";
    facts.push_back(std::move(f));
  } else {
    facts.push_back(extended_hamming_facts_structural(k));
  }

  for (int order : refinement_orders) {
    const LayerSpec spec = make_layer_spec(order, k);
    if (spec.scale_exp < 2) {
      throw InvalidParameter(
          "invalid-parameter: refinement orders must satisfy k - order >= 4");
    }
    LayerFacts f;
    f.order = order;
    f.scale_exp = spec.scale_exp;
    f.is_base = false;
    const uint64_t claimed = uint64_t{1} << (k - order);
    const uint64_t dim = rm_dimension(order, k);
    if (dim <= enum_cap && dim <= 62) {
      const uint64_t mw = min_weight(reed_muller(order, k), enum_cap);
      if (mw != claimed) {
        throw InternalConsistencyFailure(
            "internal-consistency-failure: Reed-Muller minimum weight " +
            std::to_string(mw) + ", expected " + std::to_string(claimed));
      }
      f.min_weight = mw;
      f.verified = true;
      f.method = "enumeration";
    } else {
      f.min_weight = claimed;
      f.verified = false;
      f.method = "claimed only: dimension " + std::to_string(dim) +
                 " exceeds enumeration cap " + std::to_string(enum_cap);
    }
    facts.push_back(std::move(f));
  }
  return facts;
}

namespace {

BigRat margin_ratio(uint64_t numerator_weight, int scale_exp, int gap_num) {
  // weight * (gap_num / 2^scale_exp)^2
  BigRat m(BigInt(static_cast<unsigned long>(numerator_weight)) * gap_num *
               gap_num,
           BigInt(1) << (2 * scale_exp));
  m.canonicalize();
  return m;
}

std::string layer_tag(const LayerFacts& f) {
  return f.is_base ? "base" : "layer r=" + std::to_string(f.order);
}

}  // namespace

CertificateReport certificate_from_facts(int k,
                                         const std::vector<LayerFacts>& facts,
                                         bool augmented16) {
  if (augmented16 && k != 4) {
    throw InvalidParameter(
        "invalid-parameter: the augmented construction lives in dimension 16");
  }
  const LayerFacts* base = nullptr;
  for (const LayerFacts& f : facts) {
    if (f.is_base) {
      base = &f;
    }
  }
  if (base == nullptr) {
    throw InvalidParameter("invalid-parameter: no base layer facts");
  }

  CertificateReport report;
  report.layers = facts;
  report.complete = true;
  bool margins_ok = true;

  const auto add_case = [&report, &margins_ok](std::string name,
                                               std::string detail,
                                               BigRat margin, bool verified) {
    margins_ok = margins_ok && margin >= 1;
    report.complete = report.complete && verified;
    report.cases.push_back(
        {std::move(name), std::move(detail), std::move(margin), verified});
  };

  for (const LayerFacts& f : facts) {
    const std::string tag = layer_tag(f);
    // (a) Same codeword and multiplier, different off-support fill: the
    // fills first differ in some coordinate, where one point holds 0 and
    // the other 1.
    add_case("same codeword, different fill [" + tag + "]",
             "an off-support coordinate differs by 1; 1^2 = 1", BigRat(1),
             true);

    if (f.scale_exp >= 2) {
      // (b) Same codeword, different multipliers: both values are odd
      // multiples of 1/2^m, so they differ by at least 2/2^m across the
      // whole support.
      add_case(
          "same codeword, different multipliers [" + tag + "]",
          "support size >= " + std::to_string(f.min_weight) +
              ", each coordinate differs by >= 2/2^" +
              std::to_string(f.scale_exp),
          margin_ratio(f.min_weight, f.scale_exp, 2), f.verified);
    }

    // (c) Different codewords of the same layer: on the symmetric
    // difference of the supports, one point holds an odd multiple of
    // 1/2^m and the other an integer (0 or 1). The symmetric difference
    // is the support of the XOR, a nonzero codeword.
    add_case("different codewords, same layer [" + tag + "]",
             "symmetric difference >= " + std::to_string(f.min_weight) +
                 " coordinates, each differing by >= 1/2^" +
                 std::to_string(f.scale_exp),
             margin_ratio(f.min_weight, f.scale_exp, 1), f.verified);
  }

  // (d) Pairs from layers at different scales, same codeword or not: every
  // support coordinate of the finer point is an odd multiple of 1/2^m1,
  // while every coordinate of the coarser point is a multiple of 1/2^m2,
  // hence an even multiple of 1/2^m1. No containment between the two
  // codes is needed.
  for (const LayerFacts& fine : facts) {
    for (const LayerFacts& coarse : facts) {
      if (fine.scale_exp <= coarse.scale_exp) {
        continue;
      }
      add_case("cross-scale pair [" + layer_tag(fine) + " vs " +
                   layer_tag(coarse) + "]",
               "the finer support has >= " + std::to_string(fine.min_weight) +
                   " coordinates differing by >= 1/2^" +
                   std::to_string(fine.scale_exp),
               margin_ratio(fine.min_weight, fine.scale_exp, 1),
               fine.verified);
    }
  }

  if (augmented16) {
    // Augmented points hold 1/4 on the codeword support and 3/4 elsewhere.
    add_case("augmented vs augmented",
             "distinct codewords differ in >= " +
                 std::to_string(base->min_weight) +
                 " coordinates; |1/4 - 3/4| = 1/2 in each",
             margin_ratio(base->min_weight, 1, 1), base->verified);
    add_case("augmented vs base",
             "all 16 coordinates are odd multiples of 1/4 against multiples "
             "of 1/2; each differs by >= 1/4",
             margin_ratio(16, 2, 1), true);
  }

  report.passed = report.complete && margins_ok;
  return report;
}

CertificateReport verify_structural(int k,
                                    const std::vector<int>& refinement_orders,
                                    bool augmented16, uint32_t enum_cap) {
  return certificate_from_facts(
      k, establish_layer_facts(k, refinement_orders, enum_cap), augmented16);
}

}  // namespace cubepack
