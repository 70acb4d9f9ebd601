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

#ifndef CUBEPACK_VERIFIER_HPP_
#define CUBEPACK_VERIFIER_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubepack/points.hpp"
#include "cubepack/weights.hpp"

namespace cubepack {

// Distance checks compare exact scaled squared distances: with E the larger
// of the two denominator exponents, dist(p, q) >= 1 holds exactly when
// sum_i (p_i * 2^(E - e_p) - q_i * 2^(E - e_q))^2 >= 4^E over the integer
// numerators. No floating point is involved anywhere.

// Exact squared distance of two points, returned as (scaled value, E).
std::pair<BigInt, uint32_t> scaled_sqdist(const DyadicPoint& p,
                                          const DyadicPoint& q);

struct DistanceReport {
  std::string mode;
  uint64_t pairs_checked = 0;
  uint32_t scale_exp = 0;  // E of the whole run (max over the set)
  BigInt min_scaled_sq;
  uint64_t argmin_i = 0;
  uint64_t argmin_j = 0;
  bool passed = false;  // min_scaled_sq >= 4^E
  bool has_seed = false;
  uint64_t seed = 0;
};

inline constexpr std::size_t kMaxExhaustivePoints = 50000;

// All N(N-1)/2 pairs. Refuses sets larger than max_points (quadratic cost);
// sampled and structural modes are the way out. Ties in the minimum resolve
// to the lexicographically smallest (i, j), independent of thread count.
DistanceReport verify_exhaustive(const PointSet& ps,
                                 std::size_t max_points = kMaxExhaustivePoints,
                                 int threads = 1);

// num_pairs index pairs drawn with a seeded Mersenne Twister through a
// rejection-sampled bounded mapping, so the same seed yields the same pairs
// on every platform and any thread count. Can only ever find violations,
// never certify their absence.
DistanceReport verify_sampled(const PointSet& ps, uint64_t num_pairs,
                              uint64_t seed, int threads = 1);

// Sampled pairs with one endpoint in each set (useful for checking a small
// set against a sample of a huge one).
DistanceReport verify_sampled_cross(const PointSet& a, const PointSet& b,
                                    uint64_t num_pairs, uint64_t seed,
                                    int threads = 1);

// Every pair with one endpoint in each set: |a| * |b| distance evaluations.
// This is the thorough option behind an explicit flag at the CLI.
DistanceReport verify_all_cross(const PointSet& a, const PointSet& b,
                                int threads = 1);

// Number of excess occurrences over distinct values (sum of multiplicity-1),
// via canonical keys. Zero means all points distinct.
uint64_t check_no_duplicates(const PointSet& ps);

// What a structural certificate knows about one layer's code.
struct LayerFacts {
  int order = 0;      // Reed-Muller order (the base layer reports k - 2)
  int scale_exp = 0;  // m: support coordinates are odd multiples of 1/2^m
  bool is_base = false;
  uint64_t min_weight = 0;  // the value the cases below rely on
  bool verified = false;    // was min_weight actually established?
  std::string method;       // "enumeration", "parity-check structure", ...
};

struct CertificateCase {
  std::string name;
  std::string detail;
  BigRat margin;  // proven lower bound on squared distance for these pairs
  bool verified = false;
};

struct CertificateReport {
  std::vector<LayerFacts> layers;
  std::vector<CertificateCase> cases;
  bool complete = false;  // every fact the cases rely on was verified
  bool passed = false;    // complete and every margin >= 1
};

// Establishes the minimum weight of the base layer code and each refinement
// layer code: by enumeration when the dimension is within cap, and for the
// extended Hamming code alternatively from its parity-check structure
// (distinct nonzero columns force weight >= 3, the parity coordinate forces
// even weights, and an explicit weight-4 word caps it), which needs no
// enumeration at all.
std::vector<LayerFacts> establish_layer_facts(
    int k, const std::vector<int>& refinement_orders,
    uint32_t enum_cap = kDefaultEnumerationCap);

// Pure assembly of the distance case analysis from given facts. Split out
// so tests can feed it falsified facts and watch it fail.
CertificateReport certificate_from_facts(int k,
                                         const std::vector<LayerFacts>& facts,
                                         bool augmented16);

// The mechanized distance proof for a construction: same-codeword cases,
// same-layer cross-codeword cases, cross-layer cases, and the augmented
// cases for k = 4. Every margin is an exact rational and must be >= 1.
CertificateReport verify_structural(
    int k, const std::vector<int>& refinement_orders, bool augmented16,
    uint32_t enum_cap = kDefaultEnumerationCap);

}  // namespace cubepack

#endif  // CUBEPACK_VERIFIER_HPP_
