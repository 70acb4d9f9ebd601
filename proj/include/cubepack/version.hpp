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

#ifndef CUBEPACK_VERSION_HPP_
#define CUBEPACK_VERSION_HPP_

namespace cubepack {

inline constexpr const char* kVersion = "1.0.0";

// First line of the point file format and the "version" field of every
// machine-readable report. Bump on any incompatible format change.
inline constexpr const char* kFileFormatTag = "cubepack v1";

}  // namespace cubepack

#endif  // CUBEPACK_VERSION_HPP_
