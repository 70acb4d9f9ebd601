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

#ifndef CUBEPACK_CLI_HPP_
#define CUBEPACK_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cubepack {

// Runs the command-line tool in process so tests can capture its streams.
// `args` is argv without the program name.
//
// Exit codes:
//   0  success (for verify: the packing property was confirmed)
//   1  verification ran and found a violation (or an unproven certificate)
//   2  usage error or invalid parameter
//   3  the request was refused (enumeration, materialization, or pair
//      budget over the configured limit); nothing was computed
//   4  internal error, including cross-check failures between independent
//      computations of the same quantity
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cubepack

#endif  // CUBEPACK_CLI_HPP_
