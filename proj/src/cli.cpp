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

#include "cubepack/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubepack/bounds.hpp"
#include "cubepack/codes.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/packing.hpp"
#include "cubepack/pointfile.hpp"
#include "cubepack/points.hpp"
#include "cubepack/verifier.hpp"
#include "cubepack/version.hpp"
#include "cubepack/weights.hpp"

namespace cubepack {
namespace {

using nlohmann::json;

BigInt pow2z(unsigned long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

// Squared distances are reported both as the raw scaled integer and as the
// rational scaled / 4^E they stand for.
BigRat descale(const BigInt& scaled, uint32_t scale_exp) {
  BigRat q(scaled, pow2z(2ul * scale_exp));
  q.canonicalize();
  return q;
}

json rational_json(const BigRat& q) {
  json j;
  j["rational"] = q.get_str();
  j["decimal"] = decimal_string(q, 12);
  return j;
}

void emit(const json& report, std::ostream& out) {
  out << report.dump(2) << "\n";
}

json finish_report(const char* command, json config, json payload) {
  json j = std::move(payload);
  j["command"] = command;
  j["config"] = std::move(config);
  j["version"] = kVersion;
  return j;
}

// Enumeration-backed spot checks inside the CLI stay well under the user cap
// so a plain `codes` run is quick; the heavier sweeps live in the test suite.
constexpr uint32_t kCliVerifyDims = 20;

struct CodesOpts {
  int k = 0;
  uint32_t enum_cap = kDefaultEnumerationCap;
  std::string dump;
  std::string out_path;
  std::string format = "text";
};

int run_codes(const CodesOpts& o, std::ostream& out) {
  const LinearCode ham = hamming_code(o.k);
  const LinearCode eh = extend_code(ham);
  const std::size_t n = eh.length;

  const WeightDistribution w_rec = hamming_weights_recurrence(o.k);
  const WeightDistribution w_closed = hamming_weights_closed(o.k);
  if (w_rec.counts != w_closed.counts) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: recurrence and closed-form weight "
        "distributions disagree");
  }
  const bool enumerable = ham.dimension <= o.enum_cap && ham.dimension <= 62;
  if (enumerable) {
    const WeightDistribution w_brute = weights_bruteforce(ham, o.enum_cap);
    if (w_brute.counts != w_rec.counts) {
      throw InternalConsistencyFailure(
          "internal-consistency-failure: enumerated weight distribution "
          "disagrees with the recurrence");
    }
  }
  const WeightDistribution v = extended_weights(o.k);
  const std::vector<BigInt> h = points_per_weight(o.k);
  BigInt h_sum = 0;
  for (const BigInt& c : h) {
    h_sum += c;
  }
  const BigInt base = base_count(o.k);
  if (h_sum != base) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: points-per-weight table does not sum "
        "to the closed-form base count");
  }

  if (!o.dump.empty()) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) {
        throw InvalidParameter("invalid-parameter: cannot open " + o.out_path +
                               " for writing");
      }
      sink = &file;
    }
    *sink << "j,W,V,H\n";
    const BigInt zero = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      const BigInt& wj = j < w_rec.counts.size() ? w_rec.counts[j] : zero;
      *sink << j << ',' << wj.get_str() << ',' << v.counts[j].get_str() << ','
            << h[j].get_str() << '\n';
    }
    if (sink == &file) {
      file.flush();
      if (!file) {
        throw Error("error: failed writing " + o.out_path);
      }
      out << "wrote weight table for k=" << o.k << " to " << o.out_path
          << "\n";
    }
    return 0;
  }

  std::vector<LinearCode> rm;
  rm.reserve(static_cast<std::size_t>(o.k) + 1);
  for (int r = 0; r <= o.k; ++r) {
    rm.push_back(reed_muller(r, o.k));
  }
  const bool nesting_checked = o.k <= 8;
  if (nesting_checked) {
    for (int r = 0; r < o.k; ++r) {
      if (!subcode_of(rm[static_cast<std::size_t>(r)],
                      rm[static_cast<std::size_t>(r) + 1])) {
        throw InternalConsistencyFailure(
            "internal-consistency-failure: nesting broken at order " +
            std::to_string(r));
      }
    }
  }

  const auto distance_checked = [&](const LinearCode& c) {
    return c.dimension <= std::min(o.enum_cap, kCliVerifyDims) &&
           c.dimension <= 62;
  };
  const auto check_distance = [&](const LinearCode& c, const char* name) {
    if (!distance_checked(c)) {
      return false;
    }
    if (min_weight(c, o.enum_cap) != c.claimed_min_distance) {
      throw InternalConsistencyFailure(
          std::string("internal-consistency-failure: ") + name +
          " min distance does not match its construction");
    }
    return true;
  };
  const bool ham_d = check_distance(ham, "hamming");
  const bool eh_d = check_distance(eh, "extended hamming");

  const LinearCode& rm_match = rm[static_cast<std::size_t>(o.k) - 2];
  const bool eh_params_match = eh.length == rm_match.length &&
                               eh.dimension == rm_match.dimension &&
                               eh.claimed_min_distance ==
                                   rm_match.claimed_min_distance;
  if (!eh_params_match) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: extended hamming and the order k-2 "
        "layer disagree on parameters");
  }
  bool eh_weights_match = false;
  if (eh.dimension <= std::min(o.enum_cap, kCliVerifyDims)) {
    eh_weights_match = weights_bruteforce(eh, o.enum_cap).counts ==
                       weights_bruteforce(rm_match, o.enum_cap).counts;
    if (!eh_weights_match) {
      throw InternalConsistencyFailure(
          "internal-consistency-failure: extended hamming and the order k-2 "
          "layer disagree on weights");
    }
  }

  const std::string agree_line =
      enumerable
          ? "3/3 methods agree (recurrence, closed form, direct enumeration)"
          : "2/2 methods agree (direct enumeration skipped: dimension " +
                std::to_string(ham.dimension) + " exceeds cap " +
                std::to_string(o.enum_cap) + ")";

  if (o.format == "json") {
    json codes;
    const auto code_json = [](const LinearCode& c, bool verified) {
      json j;
      j["length"] = c.length;
      j["dimension"] = c.dimension;
      j["min_distance"] = c.claimed_min_distance;
      j["min_distance_verified"] = verified;
      return j;
    };
    codes["hamming"] = code_json(ham, ham_d);
    codes["extended_hamming"] = code_json(eh, eh_d);
    json chain = json::array();
    for (int r = 0; r <= o.k; ++r) {
      const LinearCode& c = rm[static_cast<std::size_t>(r)];
      json j = code_json(c, false);
      j.erase("min_distance_verified");
      j["order"] = r;
      chain.push_back(std::move(j));
    }
    codes["reed_muller"] = std::move(chain);

    const auto sparse = [](const std::vector<BigInt>& counts) {
      json rows = json::array();
      for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] != 0) {
          rows.push_back(json::array({j, counts[j].get_str()}));
        }
      }
      return rows;
    };
    json weights;
    weights["methods_agree"] = enumerable ? "3/3" : "2/2";
    weights["hamming"] = sparse(w_rec.counts);
    weights["extended"] = sparse(v.counts);
    weights["points_per_weight"] = sparse(h);

    json payload;
    payload["codes"] = std::move(codes);
    payload["weights"] = std::move(weights);
    payload["base_count"] = base.get_str();
    payload["nesting_checked"] = nesting_checked;
    payload["extended_hamming_matches_order_k_minus_2"] =
        eh_weights_match ? "parameters and weights" : "parameters";
    json config;
    config["k"] = o.k;
    config["enum_cap"] = o.enum_cap;
    emit(finish_report("codes", std::move(config), std::move(payload)), out);
    return 0;
  }

  out << "code family for k=" << o.k << " (cube dimension n=" << n << ")\n\n";
  const auto params = [](const LinearCode& c) {
    return "[" + std::to_string(c.length) + ", " +
           std::to_string(c.dimension) + ", " +
           std::to_string(c.claimed_min_distance) + "]";
  };
  const auto verified_tag = [](bool b) {
    return b ? "   min distance verified" : "";
  };
  out << "  hamming           " << params(ham) << verified_tag(ham_d) << "\n";
  out << "  extended hamming  " << params(eh) << verified_tag(eh_d) << "\n";
  out << "  reed-muller chain:\n";
  for (int r = 0; r <= o.k; ++r) {
    out << "    RM(" << r << "," << o.k << ") = "
        << params(rm[static_cast<std::size_t>(r)]) << "\n";
  }
  if (nesting_checked) {
    out << "  nesting RM(0," << o.k << ") through RM(" << o.k << "," << o.k
        << "): verified\n";
  } else {
    out << "  nesting check skipped for k > 8\n";
  }
  out << "  extended hamming matches RM(" << o.k - 2 << "," << o.k << ") "
      << (eh_weights_match ? "parameters and weight distribution"
                           : "parameters")
      << "\n\n";

  out << "weights: " << agree_line << "\n\n";
  if (o.k <= 6) {
    std::size_t width = 1;
    for (const BigInt& c : h) {
      width = std::max(width, c.get_str().size());
    }
    for (const BigInt& c : v.counts) {
      width = std::max(width, c.get_str().size());
    }
    const int w = static_cast<int>(width) + 2;
    out << std::setw(4) << "j" << std::setw(w) << "W" << std::setw(w) << "V"
        << std::setw(w) << "H" << "\n";
    for (std::size_t j = 0; j <= n; ++j) {
      const bool has_w = j < w_rec.counts.size() && w_rec.counts[j] != 0;
      if (!has_w && v.counts[j] == 0) {
        continue;
      }
      out << std::setw(4) << j << std::setw(w)
          << (j < w_rec.counts.size() ? w_rec.counts[j].get_str() : "0")
          << std::setw(w) << v.counts[j].get_str() << std::setw(w)
          << h[j].get_str() << "\n";
    }
    out << "\n";
  } else {
    out << "weight table omitted for k > 6; use --dump weights\n\n";
  }
  out << "base packing size: " << base.get_str()
      << " (table sum matches closed formula)\n";
  return 0;
}

struct BuildOpts {
  int k = 0;
  std::string construction;
  std::string out_path;
  std::uint64_t max_points = kDefaultMaxPoints;
  uint32_t enum_cap = kDefaultEnumerationCap;
};

int run_build(const BuildOpts& o, std::ostream& out) {
  const std::size_t budget = static_cast<std::size_t>(o.max_points);
  PointSet ps = [&] {
    if (o.construction == "base") {
      return build_base(o.k, budget, o.enum_cap);
    }
    if (o.construction == "augmented16") {
      if (o.k != 4) {
        throw InvalidParameter(
            "invalid-parameter: augmented16 is a dimension-16 construction, "
            "pass --k 4");
      }
      // The shifted copy only pays off on top of the base packing, so the
      // built set is their union.
      PointSet set = build_base(4, budget, o.enum_cap);
      stream_augmented16([&](const DyadicPoint& p) {
        set.add(p);
        return true;
      });
      if (set.size() > budget) {
        throw MaterializationRefused(
            "materialization-refused: union exceeds --max-points");
      }
      return set;
    }
    return build_general(o.k, budget, o.enum_cap);
  }();

  if (o.out_path.empty()) {
    write_point_file(out, ps);
    return 0;
  }
  std::ofstream file(o.out_path);
  if (!file) {
    throw InvalidParameter("invalid-parameter: cannot open " + o.out_path +
                           " for writing");
  }
  write_point_file(file, ps);
  file.flush();
  if (!file) {
    throw Error("error: failed writing " + o.out_path);
  }
  out << "wrote " << ps.size() << " points of dimension " << ps.dim()
      << " to " << o.out_path << "\n";
  return 0;
}

struct CountOpts {
  int k = 0;
  std::string construction;
  std::string mode = "exact";
  uint32_t enum_cap = kDefaultEnumerationCap;
  std::string format = "text";
};

struct CountRow {
  std::string layer;
  BigInt points;
  bool exact = true;
};

int run_count(const CountOpts& o, std::ostream& out) {
  std::vector<CountRow> rows;
  BigInt total = 0;
  bool exact = true;

  if (o.construction == "base") {
    rows.push_back({"base", count_base(o.k), true});
  } else if (o.construction == "augmented16") {
    if (o.k != 4) {
      throw InvalidParameter(
          "invalid-parameter: augmented16 is a dimension-16 construction, "
          "pass --k 4");
    }
    rows.push_back({"base", count_base(4), true});
    BigInt aug = 0;
    stream_augmented16([&](const DyadicPoint&) {
      ++aug;
      return true;
    });
    rows.push_back({"augmented16", aug, true});
  } else {
    const CountMode mode =
        o.mode == "exact" ? CountMode::kExact : CountMode::kLowerBound;
    const CountReport rep = count_general(o.k, mode, o.enum_cap);
    for (const LayerCount& lc : rep.layers) {
      rows.push_back({lc.is_base ? std::string("base")
                                 : "rm(" + std::to_string(lc.order) + ")",
                      lc.points, lc.exact});
    }
  }
  for (const CountRow& r : rows) {
    total += r.points;
    exact = exact && r.exact;
  }

  if (o.format == "json") {
    json layers = json::array();
    for (const CountRow& r : rows) {
      json j;
      j["layer"] = r.layer;
      j["points"] = r.points.get_str();
      j["exact"] = r.exact;
      layers.push_back(std::move(j));
    }
    json payload;
    payload["layers"] = std::move(layers);
    payload["total"] = total.get_str();
    payload["exact"] = exact;
    json config;
    config["k"] = o.k;
    config["construction"] = o.construction;
    config["mode"] = o.mode;
    config["enum_cap"] = o.enum_cap;
    emit(finish_report("count", std::move(config), std::move(payload)), out);
    return 0;
  }

  out << "count for k=" << o.k << " (n=" << (std::size_t{1} << o.k)
      << "), construction=" << o.construction << ", mode=" << o.mode
      << "\n\n";
  for (const CountRow& r : rows) {
    out << "  " << std::left << std::setw(14) << (r.layer + ":") << std::right
        << r.points.get_str() << (r.exact ? "" : "  (lower bound)") << "\n";
  }
  out << "\n  total: " << total.get_str()
      << (exact ? "" : "  (lower bound: not every layer was enumerated)")
      << "\n";
  return 0;
}

struct VerifyOpts {
  std::string in_path;
  std::string mode;
  std::uint64_t pairs = 1'000'000;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 1;
  std::uint64_t max_points = kMaxExhaustivePoints;
  int k = 0;
  bool k_set = false;
  std::string construction;
  uint32_t enum_cap = kDefaultEnumerationCap;
  bool thorough = false;
  std::string format = "text";
};

json distance_json(const DistanceReport& r, int duplicates) {
  json j;
  j["mode"] = r.mode;
  j["pairs_checked"] = r.pairs_checked;
  j["scale_exp"] = r.scale_exp;
  if (r.pairs_checked > 0) {
    j["scaled_min"] = r.min_scaled_sq.get_str();
    j["min_squared_distance"] = rational_json(descale(r.min_scaled_sq,
                                                      r.scale_exp));
    j["argmin"] = json::array({r.argmin_i, r.argmin_j});
  }
  if (r.has_seed) {
    j["seed"] = r.seed;
  }
  if (duplicates >= 0) {
    j["duplicate_rows"] = duplicates;
  }
  j["passed"] = r.passed;
  return j;
}

void distance_text(const DistanceReport& r, int64_t duplicates,
                   std::ostream& out) {
  out << "  pairs checked: " << r.pairs_checked << "\n";
  if (r.has_seed) {
    out << "  seed: " << r.seed << "\n";
  }
  out << "  scale: coordinates are multiples of 1/2^" << r.scale_exp << "\n";
  if (r.pairs_checked > 0) {
    const BigRat sq = descale(r.min_scaled_sq, r.scale_exp);
    out << "  min squared distance: " << sq.get_str() << " = "
        << decimal_string(sq, 12) << " (scaled " << r.min_scaled_sq.get_str()
        << ", attained by rows " << r.argmin_i << " and " << r.argmin_j
        << ")\n";
  }
  if (duplicates >= 0) {
    out << "  duplicate rows: " << duplicates << "\n";
  }
  out << "  result: " << (r.passed ? "PASS" : "FAIL")
      << (r.passed ? " (no pair closer than 1)"
                   : " (a pair closer than 1 exists)")
      << "\n";
}

int run_verify_distance(const VerifyOpts& o, std::ostream& out) {
  std::ifstream file(o.in_path);
  if (!file) {
    throw InvalidParameter("invalid-parameter: cannot open " + o.in_path);
  }
  const PointSet ps = read_point_file(file);

  DistanceReport rep;
  int64_t duplicates = -1;
  if (o.mode == "exhaustive") {
    rep = verify_exhaustive(ps, static_cast<std::size_t>(o.max_points),
                            o.threads);
    duplicates = static_cast<int64_t>(check_no_duplicates(ps));
  } else {
    rep = verify_sampled(ps, o.pairs, o.seed, o.threads);
  }

  if (o.format == "json") {
    json config;
    config["in"] = o.in_path;
    config["mode"] = o.mode;
    if (o.mode == "exhaustive") {
      config["max_points"] = o.max_points;
    } else {
      config["pairs"] = o.pairs;
      config["seed"] = o.seed;
    }
    json payload;
    payload["points"] = ps.size();
    payload["dimension"] = ps.dim();
    payload["report"] = distance_json(rep, static_cast<int>(duplicates));
    emit(finish_report("verify", std::move(config), std::move(payload)), out);
  } else {
    out << "verify mode=" << o.mode << " file=" << o.in_path << "\n";
    out << "  points: " << ps.size() << " (dimension " << ps.dim() << ")\n";
    distance_text(rep, duplicates, out);
  }
  return rep.passed ? 0 : 1;
}

int run_verify_thorough(const VerifyOpts& o, std::ostream& out) {
  std::ifstream file(o.in_path);
  if (!file) {
    throw InvalidParameter("invalid-parameter: cannot open " + o.in_path);
  }
  const PointSet all = read_point_file(file);

  // The fine group holds quarter-scale points, the coarse group everything
  // at half scale or wider; anything else is not the union this mode checks.
  PointSet fine(all.dim());
  PointSet coarse(all.dim());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const uint8_t e = all.exp(i);
    if (e == 2) {
      fine.add(all.get(i));
    } else if (e < 2) {
      coarse.add(all.get(i));
    } else {
      throw InvalidParameter(
          "invalid-parameter: --thorough expects a union of a base packing "
          "and a quarter-scale layer; found denominator exponent " +
          std::to_string(e));
    }
  }
  if (fine.empty() || coarse.empty()) {
    throw InvalidParameter(
        "invalid-parameter: --thorough found only one scale group in " +
        o.in_path);
  }

  const DistanceReport cross = verify_all_cross(fine, coarse, o.threads);
  const DistanceReport within =
      verify_exhaustive(fine, static_cast<std::size_t>(o.max_points),
                        o.threads);
  const bool passed = cross.passed && within.passed;

  if (o.format == "json") {
    json config;
    config["in"] = o.in_path;
    config["mode"] = "cross-all";
    json payload;
    payload["fine_points"] = fine.size();
    payload["coarse_points"] = coarse.size();
    payload["cross"] = distance_json(cross, -1);
    payload["within_fine"] = distance_json(within, -1);
    payload["passed"] = passed;
    emit(finish_report("verify", std::move(config), std::move(payload)), out);
  } else {
    out << "verify mode=cross-all file=" << o.in_path << "\n";
    out << "  groups: " << fine.size() << " quarter-scale points, "
        << coarse.size() << " coarser points\n";
    out << "cross pairs (every fine point against every coarse point):\n";
    distance_text(cross, -1, out);
    out << "within the quarter-scale group (exhaustive):\n";
    distance_text(within, -1, out);
    out << "note: pairs within the coarser group are not covered here; "
           "verify that file separately (sampled or structural)\n";
    out << "overall: " << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? 0 : 1;
}

int run_verify_structural(const VerifyOpts& o, std::ostream& out) {
  std::vector<int> orders;
  bool augmented = false;
  if (o.construction == "general") {
    orders = general_layer_orders(o.k);
  } else if (o.construction == "augmented16") {
    if (o.k != 4) {
      throw InvalidParameter(
          "invalid-parameter: augmented16 is a dimension-16 construction, "
          "pass --k 4");
    }
    augmented = true;
  }
  const CertificateReport rep =
      verify_structural(o.k, orders, augmented, o.enum_cap);

  if (o.format == "json") {
    json layers = json::array();
    for (const LayerFacts& f : rep.layers) {
      json j;
      j["order"] = f.order;
      j["scale_exp"] = f.scale_exp;
      j["is_base"] = f.is_base;
      j["min_weight"] = f.min_weight;
      j["verified"] = f.verified;
      j["method"] = f.method;
      layers.push_back(std::move(j));
    }
    json cases = json::array();
    for (const CertificateCase& c : rep.cases) {
      json j;
      j["name"] = c.name;
      j["detail"] = c.detail;
      j["margin"] = rational_json(c.margin);
      j["verified"] = c.verified;
      cases.push_back(std::move(j));
    }
    json payload;
    payload["layers"] = std::move(layers);
    payload["cases"] = std::move(cases);
    payload["complete"] = rep.complete;
    payload["passed"] = rep.passed;
    json config;
    config["k"] = o.k;
    config["construction"] = o.construction;
    config["mode"] = "structural";
    config["enum_cap"] = o.enum_cap;
    emit(finish_report("verify", std::move(config), std::move(payload)), out);
  } else {
    out << "structural certificate: k=" << o.k
        << ", construction=" << o.construction << "\n\n";
    out << "  layers:\n";
    for (const LayerFacts& f : rep.layers) {
      out << "    " << (f.is_base ? "base " : "rm(" + std::to_string(f.order) +
                                                  ")")
          << ": coordinate scale 1/2^" << f.scale_exp << ", min weight "
          << f.min_weight << " (" << f.method << ")"
          << (f.verified ? "" : "  [unverified]") << "\n";
    }
    out << "\n  pair cases (lower bounds on squared distance):\n";
    for (const CertificateCase& c : rep.cases) {
      out << "    [" << (c.verified ? "proven" : "unproven") << "] "
          << std::left << std::setw(44) << c.name << std::right << ">= "
          << c.margin.get_str() << "\n";
      if (!c.detail.empty()) {
        out << "        " << c.detail << "\n";
      }
    }
    out << "\n  certificate complete: " << (rep.complete ? "yes" : "no")
        << "\n";
    out << "  result: " << (rep.passed ? "PASS" : "FAIL")
        << (rep.passed
                ? " (every pair of distinct points is at distance >= 1)"
                : " (certificate does not establish the packing property)")
        << "\n";
  }
  return rep.passed ? 0 : 1;
}

int run_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.thorough) {
    if (o.in_path.empty()) {
      throw InvalidParameter("invalid-parameter: --thorough requires --in");
    }
    return run_verify_thorough(o, out);
  }
  if (o.mode.empty()) {
    throw InvalidParameter(
        "invalid-parameter: pass --mode exhaustive|sampled|structural "
        "(or --thorough)");
  }
  if (o.mode == "structural") {
    if (!o.k_set || o.construction.empty()) {
      throw InvalidParameter(
          "invalid-parameter: structural mode requires --k and "
          "--construction");
    }
    if (!o.in_path.empty()) {
      throw InvalidParameter(
          "invalid-parameter: structural mode checks a construction, not a "
          "file; drop --in");
    }
    return run_verify_structural(o, out);
  }
  if (o.in_path.empty()) {
    throw InvalidParameter("invalid-parameter: " + o.mode +
                           " mode requires --in");
  }
  if (o.k_set || !o.construction.empty()) {
    throw InvalidParameter("invalid-parameter: --k and --construction only "
                           "apply to structural mode");
  }
  if (o.mode == "sampled" && !o.seed_set) {
    throw InvalidParameter(
        "invalid-parameter: sampled mode requires an explicit --seed so runs "
        "are reproducible");
  }
  return run_verify_distance(o, out);
}

struct BoundsOpts {
  int k = 0;
  std::string format = "text";
};

int run_bounds(const BoundsOpts& o, std::ostream& out) {
  const BoundReport r = bound_report(o.k);

  if (o.format == "json") {
    json terms = json::array();
    for (const BoundTerm& t : r.terms) {
      json j;
      j["r_prime"] = t.r_prime;
      j["value"] = t.value.get_str();
      terms.push_back(std::move(j));
    }
    json payload;
    payload["base"] = r.base.get_str();
    payload["terms"] = std::move(terms);
    payload["lower_bound"] = r.lower_bound.get_str();
    payload["estimate_displayed"] = rational_json(r.estimate_displayed);
    payload["low_order_exact_sum"] = r.low_order_exact_sum.get_str();
    payload["low_order_displayed_sum"] = r.low_order_displayed_sum.get_str();
    payload["low_order_discrepancy"] = r.low_order_discrepancy.get_str();
    if (r.k % 2 == 1) {
      json ineq = json::array();
      for (const auto& [rp, holds] : r.exponent_inequalities) {
        ineq.push_back(json::array({rp, holds}));
      }
      payload["exponent_inequalities"] = std::move(ineq);
      payload["leech_ratio"] = rational_json(r.leech_ratio_value);
    } else {
      payload["endpoint_violation"] = r.endpoint_violation;
    }
    json config;
    config["k"] = o.k;
    emit(finish_report("bounds", std::move(config), std::move(payload)), out);
    return 0;
  }

  out << "packing lower bound for k=" << o.k << " (n=" << (1ul << o.k)
      << ")\n\n";
  out << "  base construction:   " << r.base.get_str() << "\n";
  for (const BoundTerm& t : r.terms) {
    out << "  refinement r'=" << t.r_prime << ":     " << t.value.get_str()
        << "\n";
  }
  out << "  combined lower bound: " << r.lower_bound.get_str() << "\n\n";
  out << "  closed-form estimate (as displayed): "
      << decimal_string(r.estimate_displayed, 18) << "\n";
  out << "  low-order sum, exact:     " << r.low_order_exact_sum.get_str()
      << "\n";
  out << "  low-order sum, displayed: "
      << r.low_order_displayed_sum.get_str() << "\n";
  out << "  discrepancy (4n):         " << r.low_order_discrepancy.get_str()
      << "\n\n";
  if (r.k % 2 == 1) {
    out << "  exponent inequality by even r':";
    for (const auto& [rp, holds] : r.exponent_inequalities) {
      out << " " << rp << (holds ? ":holds" : ":fails");
    }
    out << "\n";
    out << "  leech ratio: " << r.leech_ratio_value.get_str() << " = "
        << decimal_string(r.leech_ratio_value, 12) << "\n";
  } else {
    out << "  exponent inequality at the r'=k endpoint: "
        << (r.endpoint_violation ? "fails (even k)" : "holds") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "cubepack: code-based packings of unit-spaced points in the unit cube"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CodesOpts codes;
  CLI::App* c_codes = app.add_subcommand(
      "codes", "Report code parameters and weight distribution cross-checks");
  c_codes->add_option("--k", codes.k, "log2 of the cube dimension")
      ->required()
      ->check(CLI::Range(2, 13));
  c_codes->add_option("--enum-cap", codes.enum_cap,
                      "refuse enumerations beyond 2^cap codewords")
      ->capture_default_str();
  c_codes->add_option("--dump", codes.dump,
                      "write a CSV table instead of the report")
      ->check(CLI::IsMember({"weights"}));
  c_codes->add_option("--out", codes.out_path, "write the CSV dump here");
  c_codes->add_option("--format", codes.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  BuildOpts build;
  CLI::App* c_build = app.add_subcommand(
      "build", "Construct a packing and write it as a point file");
  c_build->add_option("--k", build.k, "log2 of the cube dimension")
      ->required()
      ->check(CLI::Range(2, 16));
  c_build
      ->add_option("--construction", build.construction,
                   "base, augmented16, or general")
      ->required()
      ->check(CLI::IsMember({"base", "augmented16", "general"}));
  c_build->add_option("--out", build.out_path,
                      "output path (omit to write to stdout)");
  c_build->add_option("--max-points", build.max_points,
                      "refuse to materialize more points than this")
      ->capture_default_str();
  c_build->add_option("--enum-cap", build.enum_cap,
                      "refuse enumerations beyond 2^cap codewords")
      ->capture_default_str();

  CountOpts count;
  CLI::App* c_count = app.add_subcommand(
      "count", "Count packing points without materializing them");
  c_count->add_option("--k", count.k, "log2 of the cube dimension")
      ->required()
      ->check(CLI::Range(2, 16));
  c_count
      ->add_option("--construction", count.construction,
                   "base, augmented16, or general")
      ->required()
      ->check(CLI::IsMember({"base", "augmented16", "general"}));
  c_count->add_option("--mode", count.mode, "exact or lower")
      ->check(CLI::IsMember({"exact", "lower"}))
      ->capture_default_str();
  c_count->add_option("--enum-cap", count.enum_cap,
                      "refuse enumerations beyond 2^cap codewords")
      ->capture_default_str();
  c_count->add_option("--format", count.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  VerifyOpts verify;
  CLI::App* c_verify = app.add_subcommand(
      "verify", "Check the minimum-distance property of a packing");
  c_verify->add_option("--in", verify.in_path, "point file to check");
  c_verify->add_option("--mode", verify.mode,
                       "exhaustive, sampled, or structural");
  c_verify->add_option("--pairs", verify.pairs,
                       "number of random pairs in sampled mode")
      ->capture_default_str();
  CLI::Option* seed_opt = c_verify->add_option(
      "--seed", verify.seed, "RNG seed for sampled mode (required there)");
  c_verify->add_option("--threads", verify.threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  c_verify->add_option("--max-points", verify.max_points,
                       "refuse exhaustive checks beyond this many points")
      ->capture_default_str();
  CLI::Option* k_opt = c_verify->add_option(
      "--k", verify.k, "log2 of the cube dimension (structural mode)");
  k_opt->check(CLI::Range(2, 16));
  c_verify
      ->add_option("--construction", verify.construction,
                   "construction to certify (structural mode)")
      ->check(CLI::IsMember({"base", "augmented16", "general"}));
  c_verify->add_option("--enum-cap", verify.enum_cap,
                       "refuse enumerations beyond 2^cap codewords")
      ->capture_default_str();
  c_verify->add_flag("--thorough", verify.thorough,
                     "split a union file by scale and check every cross pair");
  c_verify->add_option("--format", verify.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  BoundsOpts bounds;
  CLI::App* c_bounds = app.add_subcommand(
      "bounds", "Report packing-size lower bounds and related checks");
  c_bounds->add_option("--k", bounds.k, "log2 of the cube dimension")
      ->required()
      ->check(CLI::Range(4, 16));
  c_bounds->add_option("--format", bounds.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  verify.seed_set = seed_opt->count() > 0;
  verify.k_set = k_opt->count() > 0;

  try {
    if (c_codes->parsed()) {
      return run_codes(codes, out);
    }
    if (c_build->parsed()) {
      return run_build(build, out);
    }
    if (c_count->parsed()) {
      return run_count(count, out);
    }
    if (c_verify->parsed()) {
      return run_verify(verify, out);
    }
    return run_bounds(bounds, out);
  } catch (const InvalidParameter& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const EnumerationRefused& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const MaterializationRefused& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const VerificationRefused& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace cubepack
