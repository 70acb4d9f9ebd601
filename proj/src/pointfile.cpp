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

#include "cubepack/pointfile.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <system_error>

#include "cubepack/errors.hpp"
#include "cubepack/version.hpp"

namespace cubepack {
namespace {

[[noreturn]] void bad_file(const std::string& why) {
  throw InvalidParameter("invalid-parameter: point file: " + why);
}

void append_u64(std::string& s, uint64_t v) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  s.append(buf, end);
}

// Parses one unsigned integer from [p, end), skipping leading spaces.
// Returns the position after the number, or nullptr on failure.
const char* parse_u64(const char* p, const char* end, uint64_t& out) {
  while (p < end && *p == ' ') {
    ++p;
  }
  auto [next, ec] = std::from_chars(p, end, out);
  if (ec != std::errc() || next == p) {
    return nullptr;
  }
  return next;
}

}  // namespace

PointFileWriter::PointFileWriter(std::ostream& out, uint32_t dim,
                                 uint64_t count)
    : out_(out), dim_(dim), count_(count) {
  if (dim == 0) {
    throw InvalidParameter("invalid-parameter: dimension must be positive");
  }
  line_.clear();
  line_ += kFileFormatTag;
  line_ += " dim=";
  append_u64(line_, dim);
  line_ += " count=";
  append_u64(line_, count);
  line_ += '\n';
  out_ << line_;
}

void PointFileWriter::write(const DyadicPoint& p) {
  if (p.num.size() != dim_) {
    throw InvalidParameter("invalid-parameter: point dimension mismatch");
  }
  if (written_ == count_) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: more points than the declared count");
  }
  line_.clear();
  append_u64(line_, p.denom_exp);
  for (int32_t v : p.num) {
    line_ += ' ';
    append_u64(line_, static_cast<uint64_t>(static_cast<uint32_t>(v)));
  }
  line_ += '\n';
  out_ << line_;
  ++written_;
}

void PointFileWriter::finish() {
  if (written_ != count_) {
    throw InternalConsistencyFailure(
        "internal-consistency-failure: wrote " + std::to_string(written_) +
        " points, header declared " + std::to_string(count_));
  }
  out_.flush();
  if (!out_) {
    bad_file("write failure");
  }
}

void write_point_file(std::ostream& out, const PointSet& ps) {
  PointFileWriter w(out, ps.dim(), ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    w.write(ps.get(i));
  }
  w.finish();
}

PointSet read_point_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    bad_file("empty input");
  }
  const std::string tag = std::string(kFileFormatTag) + " dim=";
  if (header.rfind(tag, 0) != 0) {
    bad_file("bad header line");
  }
  const char* p = header.data() + tag.size();
  const char* end = header.data() + header.size();
  uint64_t dim = 0;
  p = parse_u64(p, end, dim);
  if (p == nullptr || dim == 0 || dim > (1u << 16)) {
    bad_file("bad dimension");
  }
  const std::string count_tag = " count=";
  if (std::string_view(p, end - p).rfind(count_tag, 0) != 0) {
    bad_file("missing count");
  }
  p += count_tag.size();
  uint64_t count = 0;
  p = parse_u64(p, end, count);
  if (p == nullptr || p != end) {
    bad_file("bad count");
  }

  PointSet ps(static_cast<uint32_t>(dim));
  ps.reserve(count);
  DyadicPoint pt;
  pt.num.resize(dim);
  std::string line;
  for (uint64_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      bad_file("fewer points than the declared count");
    }
    const char* q = line.data();
    const char* qend = line.data() + line.size();
    uint64_t e = 0;
    q = parse_u64(q, qend, e);
    if (q == nullptr || e > kMaxDenomExp) {
      bad_file("bad denominator exponent at point " + std::to_string(i));
    }
    pt.denom_exp = static_cast<uint32_t>(e);
    const uint64_t hi = uint64_t{1} << e;
    for (uint64_t c = 0; c < dim; ++c) {
      uint64_t v = 0;
      q = parse_u64(q, qend, v);
      if (q == nullptr || v > hi) {
        bad_file("bad coordinate at point " + std::to_string(i));
      }
      pt.num[c] = static_cast<int32_t>(v);
    }
    while (q < qend && *q == ' ') {
      ++q;
    }
    if (q != qend) {
      bad_file("trailing junk at point " + std::to_string(i));
    }
    pt.normalize();
    ps.add(pt);
  }
  std::string rest;
  if (std::getline(in, rest) && !rest.empty()) {
    bad_file("trailing junk after the declared count");
  }
  return ps;
}

}  // namespace cubepack
