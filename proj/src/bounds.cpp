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

#include "cubepack/bounds.hpp"

#include <string>

#include "cubepack/errors.hpp"

namespace cubepack {
namespace {

void check_k_range(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw InvalidParameter("invalid-parameter: k must be in [" +
                           std::to_string(lo) + ", " + std::to_string(hi) +
                           "]");
  }
}

BigInt pow2(unsigned long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

BigInt checked_div(const BigInt& a, const BigInt& d, const char* what) {
  if (d == 0 || !mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    throw InternalConsistencyFailure(
        std::string("internal-consistency-failure: inexact division in ") +
        what);
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

// prod_{i=0}^{r'-1} (2^k - 2^i) / (2^r' - 2^i): the number of r'-dimensional
// subspaces of GF(2)^k times no extra factor; integral, divided once.
BigInt subspace_product(int k, int r_prime, const char* what) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < r_prime; ++i) {
    num *= pow2(k) - pow2(i);
    den *= pow2(r_prime) - pow2(i);
  }
  return checked_div(num, den, what);
}

}  // namespace

BigRat leech_constant() {
  BigRat l(4768462, 1000000);
  l.canonicalize();
  return l;
}

std::vector<BoundTerm> lower_bound_terms(int k) {
  check_k_range(k, 4, 16);
  std::vector<BoundTerm> terms;
  for (int rp = 4; rp <= 2 * (k / 2); rp += 2) {
    BoundTerm t;
    t.r_prime = rp;
    const unsigned long exp =
        (1ul << k) - (1ul << rp) + static_cast<unsigned long>(rp / 2) - 1;
    t.value = pow2(exp) * pow2(k - rp) * subspace_product(k, rp, "bound term");
    terms.push_back(std::move(t));
  }
  return terms;
}

BigInt lower_bound_exact(int k) {
  BigInt total = base_count(k);
  for (const BoundTerm& t : lower_bound_terms(k)) {
    total += t.value;
  }
  return total;
}

BigRat closed_estimate_displayed(int k) {
  check_k_range(k, 4, 16);
  const BigInt n = pow2(k);
  const BigInt triangle = pow2(static_cast<unsigned long>(k) *
                               static_cast<unsigned long>(k + 1) / 2);
  BigRat estimate(base_count(k));
  if (k % 2 == 1) {
    estimate += leech_constant() * BigRat(triangle);
  } else {
    estimate += (leech_constant() - 2) * BigRat(triangle);
    estimate += BigRat(pow2(static_cast<unsigned long>(k / 2 - 1)));
  }
  estimate -= BigRat(low_order_terms_displayed_sum(k));
  return estimate;
}

BigInt low_order_terms_exact_sum(int k) {
  check_k_range(k, 4, 16);
  const BigInt n = pow2(k);
  // r' = 0 contributes 2n, r' = 2 contributes (2/3) n (n-1)(n-2).
  return checked_div(BigInt(2) * n * ((n - 1) * (n - 2) + 3), BigInt(3),
                     "low-order sum");
}

BigInt low_order_terms_displayed_sum(int k) {
  check_k_range(k, 4, 16);
  const BigInt n = pow2(k);
  return checked_div(BigInt(2) * n * ((n - 1) * (n - 2) - 3), BigInt(3),
                     "displayed low-order sum");
}

bool exponent_inequality_holds(int k, int r_prime) {
  if (k < 2 || k > 62 || r_prime < 0 || (r_prime % 2) != 0) {
    throw InvalidParameter(
        "invalid-parameter: need k in [2, 62] and even r' >= 0");
  }
  // 2^k - 2^r' + r'/2 - 1 >= r'^2/2 + r'/2 + 1, both sides exact in int64
  // after clearing the shared r'/2.
  const int64_t lhs = (int64_t{1} << k) - (int64_t{1} << r_prime) - 1;
  const int64_t rhs = int64_t{r_prime} * r_prime / 2 + 1;
  return lhs >= rhs;
}

std::vector<std::pair<int, bool>> exponent_inequality_check(int k) {
  check_k_range(k, 5, 19);
  if (k % 2 == 0) {
    throw InvalidParameter("invalid-parameter: defined for odd k");
  }
  std::vector<std::pair<int, bool>> out;
  for (int rp = 0; rp <= k - 1; rp += 2) {
    out.emplace_back(rp, exponent_inequality_holds(k, rp));
  }
  return out;
}

BigRat leech_ratio(int k) {
  check_k_range(k, 5, 19);
  if (k % 2 == 0) {
    throw InvalidParameter("invalid-parameter: defined for odd k");
  }
  BigInt sum = 0;
  for (int rp = 0; rp <= k - 1; rp += 2) {
    const unsigned long exp = static_cast<unsigned long>(rp) * rp / 2 +
                              static_cast<unsigned long>(rp / 2) + 1;
    sum += pow2(exp) * pow2(k - rp) * subspace_product(k, rp, "ratio term");
  }
  BigRat ratio(sum, pow2(static_cast<unsigned long>(k) *
                         static_cast<unsigned long>(k + 1) / 2));
  ratio.canonicalize();
  return ratio;
}

BoundReport bound_report(int k) {
  check_k_range(k, 4, 16);
  BoundReport r;
  r.k = k;
  r.base = base_count(k);
  r.terms = lower_bound_terms(k);
  r.lower_bound = r.base;
  for (const BoundTerm& t : r.terms) {
    r.lower_bound += t.value;
  }
  r.estimate_displayed = closed_estimate_displayed(k);
  r.low_order_exact_sum = low_order_terms_exact_sum(k);
  r.low_order_displayed_sum = low_order_terms_displayed_sum(k);
  r.low_order_discrepancy = r.low_order_exact_sum - r.low_order_displayed_sum;
  if (k % 2 == 1) {
    r.exponent_inequalities = exponent_inequality_check(k);
    r.has_leech_ratio = true;
    r.leech_ratio_value = leech_ratio(k);
  } else {
    r.endpoint_violation = !exponent_inequality_holds(k, k);
  }
  return r;
}

std::string decimal_string(const BigRat& q, int significant) {
  if (significant < 1) {
    throw InvalidParameter("invalid-parameter: need at least one digit");
  }
  if (q == 0) {
    return "0";
  }
  mpf_class f(q, 256);
  mp_exp_t exp10 = 0;
  std::string digits =
      f.get_str(exp10, 10, static_cast<std::size_t>(significant));
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  const auto trim = [](std::string s) {
    while (s.size() > 1 && s.back() == '0') {
      s.pop_back();
    }
    return s;
  };
  // get_str returns 0.<digits> * 10^exp10.
  if (exp10 >= 1 && exp10 <= significant) {
    std::string integer = digits.substr(0, static_cast<std::size_t>(exp10));
    if (integer.size() < static_cast<std::size_t>(exp10)) {
      integer.append(static_cast<std::size_t>(exp10) - integer.size(), '0');
    }
    std::string frac = trim(digits.substr(
        std::min(digits.size(), static_cast<std::size_t>(exp10))));
    if (frac.empty() || frac == "0") {
      return sign + integer;
    }
    return sign + integer + "." + frac;
  }
  if (exp10 <= 0 && exp10 > -4) {
    return sign + "0." + std::string(static_cast<std::size_t>(-exp10), '0') +
           trim(digits);
  }
  std::string mantissa = trim(digits);
  std::string head = mantissa.substr(0, 1);
  std::string tail = mantissa.size() > 1 ? "." + mantissa.substr(1) : "";
  return sign + head + tail + "e" + std::to_string(exp10 - 1);
}

}  // namespace cubepack
