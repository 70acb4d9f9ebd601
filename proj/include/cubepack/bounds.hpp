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

#ifndef CUBEPACK_BOUNDS_HPP_
#define CUBEPACK_BOUNDS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubepack/weights.hpp"

namespace cubepack {

// Lower bounds on the maximum number of points with pairwise distance >= 1
// in [0, 1]^(2^k), from the layered construction. Everything here is exact
// integer or rational arithmetic; decimal strings appear only at the report
// boundary.

// The constant 4.768462 (exactly 4768462/10^6) that the closed estimate
// borrows from the best lattice packing known in dimension 24.
BigRat leech_constant();

// One refinement layer's contribution, indexed by the even parameter
// r' = k - r (the codimension of the layer's order):
//
//   term(r') = 2^(2^k - 2^r' + r'/2 - 1) * (2^k / 2^r')
//              * prod_{i=0}^{r'-1} (2^k - 2^i) / (2^r' - 2^i),
//
// which equals the layer's minimum-weight point count
// 2^(r'/2 - 1) * 2^(2^k - 2^r') * rm_min_weight_count(k - r', k).
struct BoundTerm {
  int r_prime = 0;
  BigInt value;
};

// Terms for even r' = 4, 6, ..., 2*floor(k/2). k in [4, 16].
std::vector<BoundTerm> lower_bound_terms(int k);

// base_count(k) plus all terms: the packing size the construction
// guarantees using only minimum-weight codewords in each layer.
BigInt lower_bound_exact(int k);

// The closed estimate of the same quantity, as displayed (n = 2^k):
//
//   odd k:  base + l * 2^(k(k+1)/2) - (2/3) n [(n-1)(n-2) - 3]
//   even k: base + (l-2) * 2^(k(k+1)/2) - (2/3) n [(n-1)(n-2) - 3]
//           + 2^(k/2 - 1)
//
// with l the constant above. Exact rational.
BigRat closed_estimate_displayed(int k);

// The exact values of the two low-order sum terms (r' = 0 and r' = 2) that
// the subtraction in the closed estimate stands for: 2n and
// (2/3) n (n-1)(n-2). Their sum is (2/3) n [(n-1)(n-2) + 3], which exceeds
// the displayed subtraction (2/3) n [(n-1)(n-2) - 3] by exactly 4n. The
// discrepancy is reported, not hidden.
BigInt low_order_terms_exact_sum(int k);
BigInt low_order_terms_displayed_sum(int k);

// Whether 2^k - 2^r' + r'/2 - 1 >= r'^2/2 + r'/2 + 1 for one even r'. This
// is what lets each exact term majorize the corresponding summand of the
// estimate.
bool exponent_inequality_holds(int k, int r_prime);

// The inequality across the claimed range, even r' in [0, k - 1], for odd
// k. (For even k the endpoint r' = k lies outside the claimed range and
// genuinely fails; bound_report surfaces that.)
std::vector<std::pair<int, bool>> exponent_inequality_check(int k);

// sum over even r' in [0, k-1] of
//   2^(r'^2/2 + r'/2 + 1) * 2^(k - r') * prod (2^k - 2^i)/(2^r' - 2^i),
// divided by 2^(k(k+1)/2). For odd k. Nondecreasing in k and approaching
// the constant above from below.
BigRat leech_ratio(int k);

struct BoundReport {
  int k = 0;
  BigInt base;
  std::vector<BoundTerm> terms;
  BigInt lower_bound;
  BigRat estimate_displayed;
  BigInt low_order_exact_sum;
  BigInt low_order_displayed_sum;
  BigInt low_order_discrepancy;  // always 4 * 2^k
  std::vector<std::pair<int, bool>> exponent_inequalities;  // odd k
  bool endpoint_violation = false;  // even k: r' = k fails the inequality
  bool has_leech_ratio = false;     // odd k
  BigRat leech_ratio_value;
};

BoundReport bound_report(int k);

// Up-to-`significant`-digit decimal rendering of an exact rational, for
// report output only. Plain decimal when the magnitude allows, scientific
// otherwise.
std::string decimal_string(const BigRat& q, int significant = 10);

}  // namespace cubepack

#endif  // CUBEPACK_BOUNDS_HPP_
